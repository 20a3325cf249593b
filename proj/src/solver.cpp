#include <sandwich/error.hpp>
#include <sandwich/solver.hpp>

#include <algorithm>
#include <bit>

namespace sandwich {

std::string_view to_string(SolveVerdict v)
{
    switch (v) {
    case SolveVerdict::sat: return "SAT";
    case SolveVerdict::unsat: return "UNSAT";
    case SolveVerdict::budget: return "BUDGET";
    }
    return "?";
}

PartialCompletion::PartialCompletion(const SandwichInstance & inst) :
    inst_(&inst),
    order_(inst.order()),
    index_(static_cast<std::size_t>(inst.order()) * inst.order(), -1),
    optional_state_(inst.optional().size(), PairState::undecided),
    graph_(inst.forced_graph()),
    undecided_(inst.optional().size())
{
    for (std::size_t i = 0; i < inst.optional().size(); ++i) {
        const auto & e = inst.optional()[i];
        index_[static_cast<std::size_t>(e.u) * order_ + e.v] = static_cast<int>(i);
        index_[static_cast<std::size_t>(e.v) * order_ + e.u] = static_cast<int>(i);
    }
}

PairState PartialCompletion::state(Vertex a, Vertex b) const
{
    const int i = optional_index(a, b);
    if (i >= 0)
        return optional_state_[i];
    return graph_.adjacent(a, b) ? PairState::forced : PairState::forbidden;
}

bool PartialCompletion::decide(const Decision & d)
{
    const int i = optional_index(d.edge.u, d.edge.v);
    if (i < 0)
        return false;
    const PairState want = d.in ? PairState::in : PairState::out;
    if (optional_state_[i] != PairState::undecided)
        return optional_state_[i] == want;
    optional_state_[i] = want;
    --undecided_;
    if (d.in)
        graph_.add_edge(d.edge.u, d.edge.v);
    return true;
}

void PartialCompletion::undo(const Edge & e)
{
    const int i = optional_index(e.u, e.v);
    if (i < 0 || optional_state_[i] == PairState::undecided)
        return;
    if (optional_state_[i] == PairState::in)
        graph_.remove_edge(e.u, e.v);
    optional_state_[i] = PairState::undecided;
    ++undecided_;
}

std::vector<Edge> PartialCompletion::chosen() const
{
    std::vector<Edge> out;
    for (std::size_t i = 0; i < optional_state_.size(); ++i)
        if (optional_state_[i] == PairState::in)
            out.push_back(inst_->optional()[i]);
    return out;
}

namespace {
    struct Violation {
        bool found = false;
        bool exhausted = false;
        int undecided = 0;
        Edge branch;
    };

    constexpr int violation_scan_limit = 64;

    class Search {
    public:
        Search(const SandwichInstance & inst, PropertyId p, const SolveOptions & opts) :
            inst_(inst), p_(p), opts_(opts), partial_(inst)
        {
        }

        SolveResult run()
        {
            SolveResult result;
            const Outcome o = node(0);
            result.nodes = nodes_;
            if (o == Outcome::sat) {
                result.verdict = SolveVerdict::sat;
                result.completion = Completion{solution_};
            }
            else if (o == Outcome::fail && ! unknown_)
                result.verdict = SolveVerdict::unsat;
            else {
                result.verdict = SolveVerdict::budget;
                result.frontier = frontier_;
            }
            return result;
        }

    private:
        enum class Outcome { sat, fail, abort };

        // Scores one candidate structure on vertex set s: counts the
        // undecided pairs that would break it.
        void consider(const std::vector<Vertex> & s, Violation & best)
        {
            int undecided = 0;
            Edge first;
            bool have = false;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    if (partial_.state(s[i], s[j]) != PairState::undecided)
                        continue;
                    ++undecided;
                    Edge e(s[i], s[j]);
                    if (! have || e < first) {
                        first = e;
                        have = true;
                    }
                }
            if (! best.found || undecided < best.undecided) {
                best.found = true;
                best.undecided = undecided;
                best.branch = first;
            }
        }

        void scan_cycles(const Graph & g, const CycleQuery & q, Violation & best, int & seen)
        {
            if (best.found && best.undecided <= 1)
                return;
            auto r = for_each_chordless_cycle(g, q, [&](const Cycle & c) {
                consider(c.vertices, best);
                return ++seen < violation_scan_limit && best.undecided > 1;
            });
            if (r.status == SearchStatus::exhausted)
                best.exhausted = true;
        }

        Violation find_violation()
        {
            Violation best;
            int seen = 0;
            const Graph & g = partial_.graph();
            CycleQuery q;
            q.budget = opts_.check_budget;
            switch (p_) {
            case PropertyId::chordal:
                if (is_chordal(g).holds())
                    return best;
                q.min_length = 4;
                scan_cycles(g, q, best, seen);
                break;
            case PropertyId::c5_free:
                q.min_length = 5;
                q.max_length = 5;
                scan_cycles(g, q, best, seen);
                break;
            case PropertyId::even_hole_free:
                q.min_length = 4;
                q.parity = Parity::even;
                scan_cycles(g, q, best, seen);
                break;
            case PropertyId::odd_hole_free:
            case PropertyId::odd_antihole_free:
            case PropertyId::berge:
                q.min_length = 5;
                q.parity = Parity::odd;
                if (p_ != PropertyId::odd_antihole_free)
                    scan_cycles(g, q, best, seen);
                if (p_ != PropertyId::odd_hole_free)
                    scan_cycles(complement(g), q, best, seen);
                break;
            }
            return best;
        }

        bool apply(const std::vector<Decision> & ds, std::vector<Edge> & trail)
        {
            for (const auto & d : ds) {
                const PairState before = partial_.state(d.edge);
                if (! partial_.decide(d))
                    return false;
                if (before == PairState::undecided)
                    trail.push_back(d.edge);
            }
            return true;
        }

        void rollback(std::vector<Edge> & trail)
        {
            for (auto it = trail.rbegin(); it != trail.rend(); ++it)
                partial_.undo(*it);
            trail.clear();
        }

        bool propagate(std::vector<Edge> & trail)
        {
            if (! opts_.propagator)
                return true;
            while (true) {
                Propagation pr = opts_.propagator(partial_);
                if (pr.contradiction)
                    return false;
                const std::size_t before = trail.size();
                if (! apply(pr.implied, trail))
                    return false;
                if (trail.size() == before)
                    return true;
            }
        }

        Outcome branch_on(const std::vector<std::vector<Decision>> & alternatives, std::size_t seed_level)
        {
            for (std::size_t a = 0; a < alternatives.size(); ++a) {
                std::vector<Edge> trail;
                Outcome o = Outcome::fail;
                if (apply(alternatives[a], trail))
                    o = node(seed_level);
                if (o == Outcome::sat)
                    return o;
                rollback(trail);
                if (o == Outcome::abort) {
                    frontier_ += alternatives.size() - a - 1;
                    return o;
                }
            }
            return Outcome::fail;
        }

        Outcome node(std::size_t seed_level)
        {
            if (++nodes_ > opts_.budget) {
                frontier_ += 1;
                return Outcome::abort;
            }
            std::vector<Edge> trail;
            if (! propagate(trail)) {
                rollback(trail);
                return Outcome::fail;
            }
            Outcome o;
            if (seed_level < opts_.seeds.size())
                o = branch_on(opts_.seeds[seed_level].alternatives, seed_level + 1);
            else
                o = search_step(seed_level);
            if (o != Outcome::sat)
                rollback(trail);
            return o;
        }

        Outcome search_step(std::size_t seed_level)
        {
            const Violation v = find_violation();
            if (! v.found) {
                if (v.exhausted) {
                    unknown_ = true;
                    return Outcome::abort;
                }
                // Leave every undecided edge out and confirm.
                const auto chosen = partial_.chosen();
                const auto verdict = check(partial_.graph(), p_, opts_.check_budget).verdict;
                if (verdict == Verdict::holds) {
                    solution_ = chosen;
                    return Outcome::sat;
                }
                if (verdict == Verdict::unknown) {
                    unknown_ = true;
                    return Outcome::abort;
                }
                throw Error("solver: violation search and final check disagree");
            }
            if (v.undecided == 0)
                return Outcome::fail;
            return branch_on({{Decision{v.branch, true}}, {Decision{v.branch, false}}}, seed_level);
        }

        const SandwichInstance & inst_;
        PropertyId p_;
        const SolveOptions & opts_;
        PartialCompletion partial_;
        std::uint64_t nodes_ = 0;
        std::uint64_t frontier_ = 0;
        bool unknown_ = false;
        std::vector<Edge> solution_;
    };
} // namespace

SolveResult solve(const SandwichInstance & inst, PropertyId p, const SolveOptions & options)
{
    if (auto errors = inst.validate(); ! errors.empty())
        throw Error("solve: invalid instance: " + errors.front());
    return Search(inst, p, options).run();
}

SolveResult brute_force_solve(const SandwichInstance & inst, PropertyId p)
{
    const auto & opt = inst.optional();
    if (opt.size() > brute_force_max_optional)
        throw Error("brute_force_solve: " + std::to_string(opt.size()) + " optional edges exceeds the limit of "
            + std::to_string(brute_force_max_optional));
    if (auto errors = inst.validate(); ! errors.empty())
        throw Error("brute_force_solve: invalid instance: " + errors.front());

    SolveResult result;
    Graph g = inst.forced_graph();
    std::vector<bool> present(opt.size(), false);
    const std::uint64_t total = std::uint64_t{1} << opt.size();
    // Gray-code walk: one edge flips per step.
    for (std::uint64_t step = 0; step < total; ++step) {
        if (step > 0) {
            const int bit = std::countr_zero(step);
            present[bit] = ! present[bit];
            if (present[bit])
                g.add_edge(opt[bit].u, opt[bit].v);
            else
                g.remove_edge(opt[bit].u, opt[bit].v);
        }
        ++result.nodes;
        const auto verdict = check(g, p).verdict;
        if (verdict == Verdict::unknown)
            throw Error("brute_force_solve: recognition budget exhausted");
        if (verdict == Verdict::holds) {
            result.verdict = SolveVerdict::sat;
            result.completion = completion_of(inst, g);
            return result;
        }
    }
    result.verdict = SolveVerdict::unsat;
    return result;
}

} // namespace sandwich
