#pragma once

#include <sandwich/instance.hpp>
#include <sandwich/recognition.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace sandwich {

enum class SolveVerdict { sat, unsat, budget };

std::string_view to_string(SolveVerdict v);

struct SolveResult {
    SolveVerdict verdict = SolveVerdict::budget;
    /// Present exactly when verdict == sat.
    std::optional<Completion> completion;
    /// Search-tree nodes visited (completions tried, for brute force).
    std::uint64_t nodes = 0;
    /// Unexplored branches left on the stack when the budget ran out.
    std::uint64_t frontier = 0;
};

/// One optional edge decided in or out.
struct Decision {
    Edge edge;
    bool in = true;

    bool operator==(const Decision &) const = default;
};

enum class PairState { forced, forbidden, in, out, undecided };

/// Per-pair view of a partial completion.
class PartialCompletion {
public:
    explicit PartialCompletion(const SandwichInstance & inst);

    const SandwichInstance & instance() const noexcept { return *inst_; }

    PairState state(Vertex a, Vertex b) const;
    PairState state(const Edge & e) const { return state(e.u, e.v); }
    /// Forced, or optional and decided in.
    bool present(Vertex a, Vertex b) const
    {
        auto s = state(a, b);
        return s == PairState::forced || s == PairState::in;
    }
    /// Forbidden, or optional and decided out.
    bool excluded(Vertex a, Vertex b) const
    {
        auto s = state(a, b);
        return s == PairState::forbidden || s == PairState::out;
    }
    /// Index into instance().optional(), or -1.
    int optional_index(Vertex a, Vertex b) const { return index_[static_cast<std::size_t>(a) * order_ + b]; }

    /// False (and no change) if the edge is not optional or already decided
    /// the other way.
    bool decide(const Decision & d);
    void undo(const Edge & e);

    /// Forced edges plus edges decided in.
    const Graph & graph() const noexcept { return graph_; }
    std::vector<Edge> chosen() const;

    std::size_t undecided_count() const noexcept { return undecided_; }

private:
    const SandwichInstance * inst_;
    int order_;
    std::vector<int> index_;
    std::vector<PairState> optional_state_;
    Graph graph_;
    std::size_t undecided_;
};

/// Deductions a caller can plug into the search. They must be sound: every
/// completion with the requested property that extends the partial
/// completion must also satisfy the returned decisions.
struct Propagation {
    bool contradiction = false;
    std::vector<Decision> implied;
};

using Propagator = std::function<Propagation(const PartialCompletion &)>;

/// A forced first split of the search: exactly one alternative set of
/// decisions is tried per branch. Exactness requires the alternatives to
/// cover every completion with the property.
struct SeedChoice {
    std::vector<std::vector<Decision>> alternatives;
};

inline constexpr std::uint64_t default_solve_budget = 1'000'000;

struct SolveOptions {
    std::uint64_t budget = default_solve_budget;
    std::uint64_t check_budget = default_check_budget;
    std::vector<SeedChoice> seeds;
    Propagator propagator;
};

/// Exact backtracking search for a sandwich graph with property p.
/// Branches on undecided pairs inside a forbidden induced structure of the
/// current forced+in graph; a structure with no undecided pair closes the
/// branch.
SolveResult solve(const SandwichInstance & inst, PropertyId p, const SolveOptions & options = {});

inline constexpr std::size_t brute_force_max_optional = 20;

/// Tries all 2^|optional| completions. Throws Error past 20 optional edges.
SolveResult brute_force_solve(const SandwichInstance & inst, PropertyId p);

} // namespace sandwich
