#include <sandwich/cycles.hpp>
#include <sandwich/error.hpp>

#include <algorithm>

namespace sandwich {

Cycle make_cycle(std::vector<Vertex> vertices)
{
    if (vertices.size() < 3)
        throw Error("a cycle needs at least 3 vertices");
    auto low = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), low, vertices.end());
    if (vertices[1] > vertices.back())
        std::reverse(vertices.begin() + 1, vertices.end());
    return Cycle{std::move(vertices)};
}

bool is_chordless_cycle(const Graph & g, const std::vector<Vertex> & c)
{
    const int k = static_cast<int>(c.size());
    if (k < 3)
        return false;
    VertexSet seen(g.order());
    for (auto v : c) {
        if (! g.valid_vertex(v) || seen.contains(v))
            return false;
        seen.insert(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(c[i], c[j]) != consecutive)
                return false;
        }
    return true;
}

namespace {
    class ChordlessWalker {
    public:
        ChordlessWalker(const Graph & g, const CycleQuery & q, const std::function<bool(const Cycle &)> & visit) :
            g_(g), q_(q), visit_(visit)
        {
        }

        CycleSearchOutcome run()
        {
            const int n = g_.order();
            const int max_len = std::min(q_.max_length, n);
            if (max_len < 3 || q_.min_length > max_len)
                return outcome_;
            for (Vertex s = 0; s < n && outcome_.status == SearchStatus::complete; ++s) {
                start_ = s;
                const auto & ns = g_.neighbors(s);
                for (Vertex p1 = ns.next(s + 1); p1 != -1 && outcome_.status == SearchStatus::complete;
                     p1 = ns.next(p1 + 1)) {
                    // Neighbours of s may only be the second vertex or the
                    // closing vertex; the closing vertex must exceed p1.
                    VertexSet blocked(n);
                    for (Vertex v = 0; v <= s; ++v)
                        blocked.insert(v);
                    for (Vertex v = ns.first(); v != -1 && v < p1; v = ns.next(v + 1))
                        blocked.insert(v);
                    blocked.insert(p1);
                    path_.assign({s, p1});
                    extend(blocked, max_len);
                }
            }
            return outcome_;
        }

    private:
        bool wanted(int len) const
        {
            if (len < q_.min_length || len > q_.max_length)
                return false;
            if (q_.parity == Parity::odd)
                return len % 2 == 1;
            if (q_.parity == Parity::even)
                return len % 2 == 0;
            return true;
        }

        // path_ = s, p1, ..., pk; `blocked` holds the start range, the path,
        // and the neighbourhoods of p1..p(k-1).
        void extend(const VertexSet & blocked, int max_len)
        {
            const Vertex last = path_.back();
            const auto & ns = g_.neighbors(start_);
            const VertexSet candidates = g_.neighbors(last) - blocked;
            const int len_if_closed = static_cast<int>(path_.size()) + 1;
            for (Vertex u = candidates.first(); u != -1; u = candidates.next(u + 1)) {
                if (++outcome_.steps > q_.budget) {
                    outcome_.status = SearchStatus::exhausted;
                    return;
                }
                if (ns.contains(u)) {
                    if (u > path_[1] && wanted(len_if_closed)) {
                        std::vector<Vertex> c = path_;
                        c.push_back(u);
                        if (! visit_(Cycle{std::move(c)})) {
                            outcome_.status = SearchStatus::stopped;
                            return;
                        }
                    }
                    continue;
                }
                if (len_if_closed + 1 > max_len)
                    continue;
                VertexSet next_blocked = blocked | g_.neighbors(last);
                next_blocked.insert(u);
                path_.push_back(u);
                extend(next_blocked, max_len);
                path_.pop_back();
                if (outcome_.status != SearchStatus::complete)
                    return;
            }
        }

        const Graph & g_;
        const CycleQuery & q_;
        const std::function<bool(const Cycle &)> & visit_;
        CycleSearchOutcome outcome_;
        Vertex start_ = 0;
        std::vector<Vertex> path_;
    };
} // namespace

CycleSearchOutcome for_each_chordless_cycle(
    const Graph & g, const CycleQuery & query, const std::function<bool(const Cycle &)> & visit)
{
    if (query.min_length < 3)
        throw Error("chordless cycle search needs min_length >= 3");
    return ChordlessWalker(g, query, visit).run();
}

CycleEnumeration chordless_cycles(const Graph & g, int min_length, std::uint64_t budget)
{
    CycleEnumeration out;
    CycleQuery q;
    q.min_length = min_length;
    q.budget = budget;
    auto r = for_each_chordless_cycle(g, q, [&](const Cycle & c) {
        out.cycles.push_back(c);
        return true;
    });
    out.exhausted = r.status == SearchStatus::exhausted;
    out.steps = r.steps;
    return out;
}

CycleProbe find_chordless_cycle(const Graph & g, const CycleQuery & query)
{
    CycleProbe probe;
    auto r = for_each_chordless_cycle(g, query, [&](const Cycle & c) {
        probe.cycle = c;
        return false;
    });
    probe.exhausted = r.status == SearchStatus::exhausted;
    return probe;
}

} // namespace sandwich
