#pragma once

#include <sandwich/cnf.hpp>
#include <sandwich/cycles.hpp>
#include <sandwich/instance.hpp>

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sandwich {

/// Forced five-cycle v0 v1 v2 v3 v4 with the optional matching chords
/// v0v2 (true chord) and v1v3 (false chord).
struct FiveCycleGadget {
    std::array<Vertex, 5> cycle{};

    Edge true_chord() const { return Edge(cycle[0], cycle[2]); }
    Edge false_chord() const { return Edge(cycle[1], cycle[3]); }
};

/// Gadgets owned by one literal occurrence. `r` mirrors the variable and
/// `s` its negation; the one matching the literal's polarity is tied to
/// the clause.
struct LiteralGadgets {
    Literal literal;
    FiveCycleGadget r;
    FiveCycleGadget s;
};

/// Clause cycle p1..p5 with optional p1p2, p2p3, p3p4 and forced p4p5,
/// p5p1; per position q a forced five-cycle p_q z_q t_q p_{q+1} l_q with
/// the optional link t_q l_q.
struct ClauseGadget {
    std::array<Vertex, 5> p{};
    std::array<Vertex, 3> l{}, t{}, z{};
    std::array<LiteralGadgets, 3> literals{};

    Edge literal_edge(int q) const { return Edge(p[q], p[q + 1]); }
    Edge link_edge(int q) const { return Edge(t[q], l[q]); }
};

struct OddGadgetMap {
    std::vector<FiveCycleGadget> variables;
    std::vector<ClauseGadget> clauses;
    /// Middle vertices of the two-edge connector paths.
    std::vector<Vertex> connectors;
};

/// Sandwich instance whose C5-free sandwich graphs correspond to satisfying
/// assignments of f. Throws Error on a malformed formula.
std::pair<SandwichInstance, OddGadgetMap> build_c5_instance(const CnfFormula & f);

/// complement_instance of build_c5_instance(f): odd-hole-free sandwich
/// graphs of the result are the complements of the odd-antihole-free ones
/// of the C5 instance.
std::pair<SandwichInstance, OddGadgetMap> build_odd_hole_free_instance(const CnfFormula & f);

/// The designated completion of the C5 instance for an assignment: one
/// chord per five-cycle gadget following the assignment, and for every
/// clause position either the link (literal true) or the clause edge.
Graph c5_completion_from_assignment(const SandwichInstance & c5_instance, const OddGadgetMap & map,
    const CnfFormula & f, const Assignment & a);

struct StructuralCheck {
    bool passed = true;
    std::vector<Vertex> witness;
    std::string detail;
};

struct StructuralReport {
    StructuralCheck forced_triangle_free;
    StructuralCheck optional_components_are_paths;  ///< each component is P1, P2 or P4
    StructuralCheck triangles_paired;               ///< one optional edge, one shared forced edge
    StructuralCheck no_p4_p1_complement;            ///< no non-induced (P4+P1)^c in G2

    bool all_passed() const
    {
        return forced_triangle_free.passed && optional_components_are_paths.passed && triangles_paired.passed
            && no_p4_p1_complement.passed;
    }
};

StructuralReport structural_report(const SandwichInstance & inst);

/// Complement of P4 + P1 (7 edges) and of P6.
Graph p4_plus_p1_complement();
Graph p6_complement();

/// A variable gadget with neither chord; the witness is its five-cycle.
struct MissingChord {
    int variable = 0;
    Cycle witness;
};

/// Reads x_i from variable gadget i: true iff its true chord is present
/// (which also wins when both are). `g` is a sandwich graph of the C5
/// instance.
std::variant<Assignment, MissingChord> extract_odd_assignment(const OddGadgetMap & map, const Graph & g);

} // namespace sandwich
