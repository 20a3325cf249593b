#pragma once

#include <sandwich/cnf.hpp>
#include <sandwich/cycles.hpp>
#include <sandwich/instance.hpp>
#include <sandwich/solver.hpp>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sandwich {

/// Knees of one (variable, clause) incidence.
struct KneePair {
    int variable = 0;
    int clause = 0;
    Vertex positive = 0;   ///< K_X^i
    Vertex negative = 0;   ///< K_~X^i
};

/// Role table of the head/foot/shoulder/knee construction.
///
/// Shoulders are shared by all clauses; knees exist per incidence. The
/// forced six-cycle of incidence (X, i) is H, S_X, K_~X^i, F, K_X^i, S_~X,
/// and H-W1-W2-F is a forced path whose inner vertices have no other edges.
struct EvenGadgetMap {
    Vertex head = 0, foot = 0, w1 = 0, w2 = 0;
    std::vector<Vertex> shoulder_positive;   ///< S_X per variable
    std::vector<Vertex> shoulder_negative;   ///< S_~X per variable
    std::vector<KneePair> incidences;        ///< clause-major, literal order
    std::vector<Clause> clauses;             ///< the formula's clauses

    Vertex shoulder(const Literal & l) const { return l.positive ? shoulder_positive[l.var] : shoulder_negative[l.var]; }
    /// Knee K_l^i; throws Error if variable l.var does not occur in clause i.
    Vertex knee(const Literal & l, int clause) const;
    const KneePair & incidence(int variable, int clause) const;
    /// Knees of the literals as written in clause i, then their complements.
    std::array<Vertex, 3> active_knees(int clause) const;
    std::array<Vertex, 3> inactive_knees(int clause) const;
    int variables() const { return static_cast<int>(shoulder_positive.size()); }
};

/// Throws Error on a malformed formula.
std::pair<SandwichInstance, EvenGadgetMap> build_even_instance(const CnfFormula & f);

enum class Orientation { undecided, positive, negative };

/// {H K_X^i, K_X^i S_X, S_X F} for positive, {H K_~X^i, K_~X^i S_~X, S_~X F}
/// for negative.
std::array<Edge, 3> orientation_edges(const EvenGadgetMap & map, const KneePair & k, bool positive);

/// Forced edges, the orientation of every incidence following `a`, a clique
/// on the true shoulders, a clique on the true knees, and every true
/// shoulder joined to every knee.
Graph completion_from_assignment(const CnfFormula & f, const Assignment & a, const EvenGadgetMap & map);

struct OrientationError {
    enum class Kind { mixed, incomplete };
    Kind kind = Kind::incomplete;
    int variable = 0;
    int clause = -1;
    /// For mixed: the C4 H, S_X, F, S_~X.
    std::optional<Cycle> witness;
};

/// Truth value per variable read from the orientation of its six-cycles.
/// Variables that occur in no clause default to false.
std::variant<Assignment, OrientationError> extract_even_assignment(const EvenGadgetMap & map, const Graph & g);

/// Orientation of every incidence as present in g (positive wins only when
/// all three positive edges are there and not all three negative ones).
std::vector<Orientation> read_orientations(const EvenGadgetMap & map, const Graph & g);

/// Either HK or FS must be present: the two optional chords of a forced
/// six-hole through W1 and W2.
struct BinaryChoice {
    Edge first;
    Edge second;
    std::array<Vertex, 6> hole{};
};

struct OrientationContradiction {
    std::string rule;
    /// Chordless cycle in forced + decided-in + implied edges whose every
    /// chord is excluded.
    Cycle certificate;
};

struct OrientationPropagation {
    /// New decisions in derivation order.
    std::vector<Decision> implied;
    /// Six-hole constraints with both chords still undecided.
    std::vector<BinaryChoice> pending;
    std::optional<OrientationContradiction> contradiction;
};

/// Closure of `decided` under the even-hole forcing rules: six-holes
/// through W1 W2 need a chord, H may see only one knee of an incidence, F
/// only one shoulder of a variable, an oriented HK/FS pair needs its K-S
/// chord, and a clause whose three inactive knees all see H collapses to a
/// C4 among its knees.
OrientationPropagation propagate_orientations(const EvenGadgetMap & map, const PartialCompletion & decided);

/// Convenience overload starting from explicit decisions on a fresh
/// partial completion. Throws Error if a decision is not optional.
OrientationPropagation propagate_orientations(
    const SandwichInstance & inst, const EvenGadgetMap & map, const std::vector<Decision> & decisions);

/// One seed choice per variable that occurs in some clause: all its
/// incidences positive, or all negative.
std::vector<SeedChoice> orientation_seeds(const EvenGadgetMap & map);

/// Solver hook wrapping propagate_orientations.
Propagator orientation_propagator(const EvenGadgetMap & map);

/// Solver options for the even-hole-free search on this instance class.
SolveOptions even_solve_options(const EvenGadgetMap & map, std::uint64_t budget = default_solve_budget);

} // namespace sandwich
