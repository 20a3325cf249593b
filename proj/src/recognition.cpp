#include <sandwich/error.hpp>
#include <sandwich/recognition.hpp>

#include <algorithm>
#include <deque>

namespace sandwich {

std::string_view to_string(PropertyId p)
{
    switch (p) {
    case PropertyId::chordal: return "chordal";
    case PropertyId::c5_free: return "c5-free";
    case PropertyId::odd_hole_free: return "odd-hole-free";
    case PropertyId::even_hole_free: return "even-hole-free";
    case PropertyId::odd_antihole_free: return "odd-antihole-free";
    case PropertyId::berge: return "berge";
    }
    return "?";
}

std::optional<PropertyId> parse_property(std::string_view name)
{
    for (auto p : all_properties)
        if (to_string(p) == name)
            return p;
    return std::nullopt;
}

std::vector<Vertex> mcs_elimination_order(const Graph & g)
{
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    std::vector<Vertex> visit;
    visit.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (! numbered[v] && (best == -1 || weight[v] > weight[best]))
                best = v;
        numbered[best] = true;
        visit.push_back(best);
        g.neighbors(best).for_each([&](Vertex u) {
            if (! numbered[u])
                ++weight[u];
        });
    }
    std::reverse(visit.begin(), visit.end());
    return visit;
}

namespace {
    // Position of the first vertex whose later neighbourhood is not a
    // clique, or -1.
    int first_elimination_failure(const Graph & g, const std::vector<Vertex> & order)
    {
        VertexSet later = VertexSet::full(g.order());
        for (std::size_t i = 0; i < order.size(); ++i) {
            const Vertex v = order[i];
            later.erase(v);
            const VertexSet ln = g.neighbors(v) & later;
            for (Vertex u = ln.first(); u != -1; u = ln.next(u + 1)) {
                VertexSet rest = ln;
                rest.erase(u);
                if (! rest.is_subset_of(g.neighbors(u)))
                    return static_cast<int>(i);
            }
        }
        return -1;
    }

    // Hole through v: v, x, (shortest x-y path avoiding N[v] except x, y), y.
    std::optional<Cycle> hole_through(const Graph & g, Vertex v)
    {
        const auto & nv = g.neighbors(v);
        for (Vertex x = nv.first(); x != -1; x = nv.next(x + 1))
            for (Vertex y = nv.next(x + 1); y != -1; y = nv.next(y + 1)) {
                if (g.adjacent(x, y))
                    continue;
                VertexSet allowed = g.all_vertices() - nv;
                allowed.erase(v);
                allowed.insert(y);
                std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
                std::deque<Vertex> queue{x};
                allowed.erase(x);
                bool found = false;
                while (! queue.empty() && ! found) {
                    const Vertex a = queue.front();
                    queue.pop_front();
                    const VertexSet step = g.neighbors(a) & allowed;
                    for (Vertex b = step.first(); b != -1; b = step.next(b + 1)) {
                        parent[b] = a;
                        allowed.erase(b);
                        if (b == y) {
                            found = true;
                            break;
                        }
                        queue.push_back(b);
                    }
                }
                if (! found)
                    continue;
                std::vector<Vertex> c{v};
                std::vector<Vertex> back;
                for (Vertex a = y; a != x; a = parent[a])
                    back.push_back(a);
                back.push_back(x);
                c.insert(c.end(), back.rbegin(), back.rend());
                return make_cycle(std::move(c));
            }
        return std::nullopt;
    }

    CycleQuery hole_query(PropertyId p, std::uint64_t budget)
    {
        CycleQuery q;
        q.budget = budget;
        switch (p) {
        case PropertyId::c5_free:
            q.min_length = 5;
            q.max_length = 5;
            break;
        case PropertyId::even_hole_free:
            q.min_length = 4;
            q.parity = Parity::even;
            break;
        case PropertyId::odd_hole_free:
        case PropertyId::odd_antihole_free:
            q.min_length = 5;
            q.parity = Parity::odd;
            break;
        default:
            q.min_length = 4;
            break;
        }
        return q;
    }

    CheckResult from_probe(const CycleProbe & probe, bool in_complement)
    {
        CheckResult r;
        if (probe.cycle) {
            r.verdict = Verdict::violated;
            r.certificate = Certificate::violation(*probe.cycle, in_complement);
        }
        else
            r.verdict = probe.exhausted ? Verdict::unknown : Verdict::holds;
        return r;
    }
} // namespace

bool is_perfect_elimination_order(const Graph & g, const std::vector<Vertex> & order)
{
    if (static_cast<int>(order.size()) != g.order())
        return false;
    VertexSet seen(g.order());
    for (auto v : order) {
        if (! g.valid_vertex(v) || seen.contains(v))
            return false;
        seen.insert(v);
    }
    return first_elimination_failure(g, order) == -1;
}

CheckResult is_chordal(const Graph & g)
{
    CheckResult r;
    auto order = mcs_elimination_order(g);
    const int failure = first_elimination_failure(g, order);
    if (failure == -1) {
        r.verdict = Verdict::holds;
        r.certificate.kind = Certificate::Kind::elimination_order;
        r.certificate.elimination_order = std::move(order);
        return r;
    }
    r.verdict = Verdict::violated;
    if (auto c = hole_through(g, order[failure])) {
        r.certificate = Certificate::violation(*c);
        return r;
    }
    // Any hole passes through one of its vertices with two non-adjacent
    // cycle neighbours, so scanning every vertex always succeeds.
    for (Vertex v = 0; v < g.order(); ++v)
        if (auto c = hole_through(g, v)) {
            r.certificate = Certificate::violation(*c);
            return r;
        }
    throw Error("is_chordal: elimination failed but no hole found");
}

std::optional<Cycle> find_c5_by_subsets(const Graph & g)
{
    // Anchor at the smallest vertex a; the other four are larger.
    const int n = g.order();
    std::vector<Vertex> pick(5);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d)
                    for (Vertex e = d + 1; e < n; ++e) {
                        pick = {a, b, c, d, e};
                        bool two_regular = true;
                        for (int i = 0; i < 5 && two_regular; ++i) {
                            int deg = 0;
                            for (int j = 0; j < 5; ++j)
                                deg += (i != j) && g.adjacent(pick[i], pick[j]);
                            two_regular = deg == 2;
                        }
                        // The only 2-regular graph on five vertices is C5.
                        if (! two_regular)
                            continue;
                        std::vector<Vertex> order{a};
                        std::vector<bool> used(5, false);
                        used[0] = true;
                        for (int k = 1; k < 5; ++k)
                            for (int j = 0; j < 5; ++j)
                                if (! used[j] && g.adjacent(order.back(), pick[j])) {
                                    used[j] = true;
                                    order.push_back(pick[j]);
                                    break;
                                }
                        return make_cycle(std::move(order));
                    }
    return std::nullopt;
}

CheckResult check(const Graph & g, PropertyId p, std::uint64_t budget)
{
    switch (p) {
    case PropertyId::chordal: return is_chordal(g);
    case PropertyId::c5_free:
        if (g.order() <= 40) {
            CheckResult r;
            if (auto c = find_c5_by_subsets(g)) {
                r.verdict = Verdict::violated;
                r.certificate = Certificate::violation(*c);
            }
            else
                r.verdict = Verdict::holds;
            return r;
        }
        return from_probe(find_chordless_cycle(g, hole_query(p, budget)), false);
    case PropertyId::odd_hole_free:
    case PropertyId::even_hole_free: return from_probe(find_chordless_cycle(g, hole_query(p, budget)), false);
    case PropertyId::odd_antihole_free:
        return from_probe(find_chordless_cycle(complement(g), hole_query(p, budget)), true);
    case PropertyId::berge: {
        auto holes = check(g, PropertyId::odd_hole_free, budget);
        if (holes.verdict == Verdict::violated)
            return holes;
        auto antiholes = check(g, PropertyId::odd_antihole_free, budget);
        if (antiholes.verdict == Verdict::violated)
            return antiholes;
        CheckResult r;
        r.verdict = (holes.verdict == Verdict::unknown || antiholes.verdict == Verdict::unknown) ? Verdict::unknown
                                                                                                  : Verdict::holds;
        return r;
    }
    }
    return {};
}

bool certificate_verifies(const Graph & g, PropertyId p, const Certificate & cert)
{
    if (cert.kind == Certificate::Kind::elimination_order)
        return p == PropertyId::chordal && is_perfect_elimination_order(g, cert.elimination_order);
    if (cert.kind != Certificate::Kind::violation)
        return false;
    const auto & c = cert.cycle.vertices;
    const int len = cert.cycle.length();
    const bool chordless = cert.in_complement ? is_chordless_cycle(complement(g), c) : is_chordless_cycle(g, c);
    if (! chordless)
        return false;
    switch (p) {
    case PropertyId::chordal: return ! cert.in_complement && len >= 4;
    case PropertyId::c5_free: return ! cert.in_complement && len == 5;
    case PropertyId::odd_hole_free: return ! cert.in_complement && len >= 5 && len % 2 == 1;
    case PropertyId::even_hole_free: return ! cert.in_complement && len >= 4 && len % 2 == 0;
    case PropertyId::odd_antihole_free: return cert.in_complement && len >= 5 && len % 2 == 1;
    case PropertyId::berge: return len >= 5 && len % 2 == 1;
    }
    return false;
}

} // namespace sandwich
