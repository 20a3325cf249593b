#include "oracles.hpp"

#include <sandwich/error.hpp>
#include <sandwich/reduction_even.hpp>
#include <sandwich/reduction_odd.hpp>
#include <sandwich/solver.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace sandwich;

namespace {

bool has(const std::vector<Edge> & edges, const Edge & e) { return std::binary_search(edges.begin(), edges.end(), e); }

// Decisions pinning every variable gadget to the assignment.
std::vector<SeedChoice> pin_variables(const OddGadgetMap & map, const Assignment & a)
{
    std::vector<Decision> ds;
    for (std::size_t i = 0; i < map.variables.size(); ++i) {
        ds.push_back({map.variables[i].true_chord(), bool(a[i])});
        ds.push_back({map.variables[i].false_chord(), ! a[i]});
    }
    return {SeedChoice{{ds}}};
}

std::vector<SeedChoice> pin_orientations(const EvenGadgetMap & map, const Assignment & a)
{
    std::vector<SeedChoice> seeds;
    for (const auto & choice : orientation_seeds(map)) {
        // Alternative 0 is the positive orientation.
        const Edge probe = choice.alternatives[0].front().edge;
        int var = -1;
        for (const auto & k : map.incidences)
            if (probe == Edge(map.head, k.positive))
                var = k.variable;
        seeds.push_back(SeedChoice{{choice.alternatives[a[var] ? 0 : 1]}});
    }
    return seeds;
}

} // namespace

TEST(OddReduction, VariableGadgetsAreFiveCyclesWithMatchingChords)
{
    const auto [inst, map] = build_c5_instance(single_clause(0));
    ASSERT_EQ(map.variables.size(), 3u);
    for (const auto & x : map.variables) {
        for (int k = 0; k < 5; ++k)
            EXPECT_TRUE(has(inst.forced(), Edge(x.cycle[k], x.cycle[(k + 1) % 5])));
        EXPECT_TRUE(has(inst.optional(), x.true_chord()));
        EXPECT_TRUE(has(inst.optional(), x.false_chord()));
        std::set<Vertex> ends{x.true_chord().u, x.true_chord().v, x.false_chord().u, x.false_chord().v};
        EXPECT_EQ(ends.size(), 4u);
    }
    EXPECT_TRUE(triangles(inst.forced_graph()).empty());
}

TEST(OddReduction, StructuralChecksDetectViolations)
{
    const auto good = structural_report(build_c5_instance(single_clause(3)).first);
    EXPECT_TRUE(good.all_passed());

    const Graph p6c = p6_complement();
    const SandwichInstance all_optional(6, {}, p6c.edges());
    const auto r = structural_report(all_optional);
    EXPECT_FALSE(r.no_p4_p1_complement.passed);
    EXPECT_EQ(r.no_p4_p1_complement.witness.size(), 5u);

    const SandwichInstance k3(3, {Edge(0, 1), Edge(1, 2), Edge(0, 2)}, {});
    const auto t = structural_report(k3);
    EXPECT_FALSE(t.forced_triangle_free.passed);
    EXPECT_EQ(t.forced_triangle_free.witness.size(), 3u);
}

TEST(OddReduction, PatternsHaveExpectedShape)
{
    EXPECT_EQ(p4_plus_p1_complement().size(), 7u);
    EXPECT_EQ(p6_complement().size(), 10u);
    EXPECT_TRUE(contains_induced_subgraph(p6_complement(), p4_plus_p1_complement()));
}

TEST(OddReduction, ComplementedInstance)
{
    std::mt19937_64 rng(47);
    const auto f = random_formula(4, 3, rng);
    const auto [c5, m1] = build_c5_instance(f);
    const auto [odd, m2] = build_odd_hole_free_instance(f);
    EXPECT_EQ(odd.optional(), c5.optional());
    EXPECT_EQ(odd.forced(), c5.forbidden());
    EXPECT_EQ(complement_instance(odd), c5);
}

TEST(OddReduction, Extraction)
{
    const auto f = single_clause(0);
    const auto [inst, map] = build_c5_instance(f);
    Graph g = inst.forced_graph();
    g.add_edge(map.variables[0].true_chord().u, map.variables[0].true_chord().v);
    g.add_edge(map.variables[2].false_chord().u, map.variables[2].false_chord().v);
    const auto missing = extract_odd_assignment(map, g);
    ASSERT_TRUE(std::holds_alternative<MissingChord>(missing));
    EXPECT_EQ(std::get<MissingChord>(missing).variable, 1);
    const auto & x2 = map.variables[1].cycle;
    EXPECT_EQ(std::get<MissingChord>(missing).witness, make_cycle({x2.begin(), x2.end()}));

    g.add_edge(map.variables[1].false_chord().u, map.variables[1].false_chord().v);
    const auto a = extract_odd_assignment(map, g);
    ASSERT_TRUE(std::holds_alternative<Assignment>(a));
    EXPECT_EQ(std::get<Assignment>(a), (Assignment{true, false, false}));
}

TEST(OddReduction, DesignedCompletionIsC5FreeExactlyOnSatisfyingAssignments)
{
    std::mt19937_64 rng(53);
    for (int i = 0; i < 12; ++i) {
        const auto f = random_formula(3 + i % 3, 1 + i % 4, rng);
        const auto [inst, map] = build_c5_instance(f);
        for (const auto & a : all_assignments(f.variables)) {
            if (! f.satisfied_by(a))
                continue;
            const Graph g = c5_completion_from_assignment(inst, map, f, a);
            EXPECT_TRUE(is_sandwich_graph(inst, g));
            EXPECT_TRUE(check(g, PropertyId::c5_free).holds());
            EXPECT_EQ(std::get<Assignment>(extract_odd_assignment(map, g)), a);
        }
    }
}

// With the variable chords pinned, a C5-free completion exists iff the
// pinned assignment satisfies the formula.
TEST(OddReduction, PinnedAssignmentsDecideSatisfaction)
{
    std::vector<CnfFormula> formulas;
    for (unsigned p = 0; p < 8; ++p)
        formulas.push_back(single_clause(p));
    std::mt19937_64 rng(59);
    for (int i = 0; i < 4; ++i)
        formulas.push_back(random_formula(4, 2, rng));
    for (const auto & f : formulas) {
        const auto [inst, map] = build_c5_instance(f);
        for (const auto & a : all_assignments(f.variables)) {
            SolveOptions opts;
            opts.seeds = pin_variables(map, a);
            const auto r = solve(inst, PropertyId::c5_free, opts);
            ASSERT_NE(r.verdict, SolveVerdict::budget);
            EXPECT_EQ(r.verdict == SolveVerdict::sat, f.satisfied_by(a));
        }
    }
}

TEST(OddReduction, OddHoleFreeSearchOnComplementedInstance)
{
    const auto f = single_clause(6);
    const auto [inst, map] = build_odd_hole_free_instance(f);
    const auto r = solve(inst, PropertyId::odd_hole_free);
    ASSERT_EQ(r.verdict, SolveVerdict::sat);
    const Graph g = inst.realize(r.completion->chosen);
    const auto a = extract_odd_assignment(map, complement(g));
    ASSERT_TRUE(std::holds_alternative<Assignment>(a));
    EXPECT_TRUE(f.satisfied_by(std::get<Assignment>(a)));
}

TEST(EvenReduction, Census)
{
    const auto [inst, map] = build_even_instance(single_clause(0));
    EXPECT_EQ(inst.order(), 16);
    EXPECT_EQ(inst.forced().size(), 27u);
    EXPECT_EQ(inst.forbidden().size(), 33u);
    EXPECT_EQ(inst.optional().size(), 60u);
    const Graph g2 = inst.upper_graph();
    EXPECT_EQ(g2.degree(map.w1), 2);
    EXPECT_EQ(g2.degree(map.w2), 2);
    std::vector<int> hits(16, 0);
    for (const auto & e : inst.forbidden())
        if (e.u != map.w1 && e.u != map.w2 && e.v != map.w1 && e.v != map.w2) {
            ++hits[e.u];
            ++hits[e.v];
        }
    for (int h : hits)
        EXPECT_LE(h, 1);
    EXPECT_EQ(inst.label(map.knee({0, false}, 0)), "K_~x1^1");
}

TEST(EvenReduction, CensusScalesWithTheFormula)
{
    // 4 + 2n + 6m vertices. Forced: four knee edges per incidence, the two
    // head-shoulder edges per occurring variable, six sun edges per clause
    // and the W path.
    std::mt19937_64 rng(61);
    for (int i = 0; i < 10; ++i) {
        const auto f = random_formula(3 + i % 4, 1 + i % 3, rng);
        const auto [inst, map] = build_even_instance(f);
        const int m = static_cast<int>(f.clauses.size());
        EXPECT_EQ(inst.order(), 4 + 2 * f.variables + 6 * m);
        std::set<int> occurring;
        for (const auto & c : f.clauses)
            for (const auto & l : c)
                occurring.insert(l.var);
        const auto forced = 12 * m + 2 * static_cast<int>(occurring.size()) + 6 * m + 3;
        EXPECT_EQ(inst.forced().size(), static_cast<std::size_t>(forced));
    }
}

TEST(EvenReduction, ForwardDirection)
{
    for (unsigned p = 0; p < 8; ++p) {
        const auto f = single_clause(p);
        const auto [inst, map] = build_even_instance(f);
        for (const auto & a : all_assignments(3)) {
            const Graph g = completion_from_assignment(f, a, map);
            EXPECT_TRUE(is_sandwich_graph(inst, g));
            EXPECT_EQ(oracle::holds(g, PropertyId::even_hole_free), f.satisfied_by(a));
            if (f.satisfied_by(a))
                EXPECT_EQ(std::get<Assignment>(extract_even_assignment(map, g)), a);
        }
    }
}

TEST(EvenReduction, AllFalseCompletionHasAKneeFourHole)
{
    const auto f = single_clause(0);
    const auto [inst, map] = build_even_instance(f);
    const Graph g = completion_from_assignment(f, {false, false, false}, map);
    const auto act = map.active_knees(0), ina = map.inactive_knees(0);
    std::vector<Vertex> knees(act.begin(), act.end());
    knees.insert(knees.end(), ina.begin(), ina.end());
    const auto holes = oracle::induced_cycles(induced(g, knees), 4);
    ASSERT_FALSE(holes.empty());
    for (const auto & h : holes) {
        EXPECT_EQ(h.size(), 4u);
        EXPECT_EQ(std::count_if(h.begin(), h.end(), [](int v) { return v < 3; }), 2);
    }
}

TEST(EvenReduction, ExtractionErrors)
{
    const auto f = single_clause(0);
    const auto [inst, map] = build_even_instance(f);
    const auto none = extract_even_assignment(map, inst.forced_graph());
    ASSERT_TRUE(std::holds_alternative<OrientationError>(none));
    EXPECT_EQ(std::get<OrientationError>(none).kind, OrientationError::Kind::incomplete);

    Graph g = completion_from_assignment(f, {true, false, false}, map);
    g.add_edge(map.foot, map.shoulder_negative[0]);
    const auto mixed = extract_even_assignment(map, g);
    ASSERT_TRUE(std::holds_alternative<OrientationError>(mixed));
    const auto & err = std::get<OrientationError>(mixed);
    EXPECT_EQ(err.kind, OrientationError::Kind::mixed);
    ASSERT_TRUE(err.witness.has_value());
    EXPECT_EQ(*err.witness, make_cycle({map.head, map.shoulder_positive[0], map.foot, map.shoulder_negative[0]}));
    EXPECT_TRUE(is_chordless_cycle(g, err.witness->vertices));
}

TEST(EvenPropagation, HeadKneeForcesShoulderEdges)
{
    const auto [inst, map] = build_even_instance(single_clause(0));
    const auto & k = map.incidence(0, 0);
    const Vertex sx = map.shoulder_positive[0];
    const auto r = propagate_orientations(inst, map, {{Edge(map.head, k.positive), true}});
    EXPECT_FALSE(r.contradiction.has_value());
    auto implied = [&](Edge e, bool in) {
        return std::find(r.implied.begin(), r.implied.end(), Decision{e, in}) != r.implied.end();
    };
    EXPECT_TRUE(implied(Edge(map.foot, sx), true));
    EXPECT_TRUE(implied(Edge(sx, k.positive), true));
    EXPECT_TRUE(implied(Edge(map.head, k.negative), false));
}

TEST(EvenPropagation, EmptyDecisionsOnlyReportBinaryChoices)
{
    const auto [inst, map] = build_even_instance(single_clause(0));
    const auto r = propagate_orientations(inst, map, {});
    EXPECT_TRUE(r.implied.empty());
    EXPECT_FALSE(r.contradiction.has_value());
    EXPECT_EQ(r.pending.size(), 2 * map.incidences.size());
    const Graph g1 = inst.forced_graph();
    for (const auto & b : r.pending) {
        EXPECT_TRUE(is_chordless_cycle(g1, {b.hole.begin(), b.hole.end()}));
        EXPECT_TRUE(has(inst.optional(), b.first));
        EXPECT_TRUE(has(inst.optional(), b.second));
    }
}

TEST(EvenPropagation, AllNegativeClauseCollapses)
{
    const auto [inst, map] = build_even_instance(single_clause(0));
    std::vector<Decision> ds;
    for (const auto & k : map.incidences)
        for (const auto & e : orientation_edges(map, k, false))
            ds.push_back({e, true});
    const auto r = propagate_orientations(inst, map, ds);
    ASSERT_TRUE(r.contradiction.has_value());
    const Vertex kx = map.knee({0, true}, 0), ky = map.knee({1, true}, 0);
    const Vertex kxn = map.knee({0, false}, 0), kyn = map.knee({1, false}, 0);
    EXPECT_EQ(r.contradiction->certificate, make_cycle({kx, ky, kxn, kyn}));
}

TEST(EvenPropagation, RejectsNonOptionalDecision)
{
    const auto [inst, map] = build_even_instance(single_clause(0));
    EXPECT_THROW(propagate_orientations(inst, map, {{Edge(map.head, map.foot), true}}), Error);
}

TEST(EvenPropagation, SoundOnDesignedCompletions)
{
    // Propagating from a satisfying completion's own orientation decisions
    // never contradicts and implies only edges that completion agrees with.
    std::mt19937_64 rng(67);
    for (int i = 0; i < 10; ++i) {
        const auto f = random_formula(3 + i % 3, 1 + i % 2, rng);
        const auto [inst, map] = build_even_instance(f);
        for (const auto & a : all_assignments(f.variables)) {
            if (! f.satisfied_by(a))
                continue;
            const Graph g = completion_from_assignment(f, a, map);
            std::vector<Decision> ds;
            for (const auto & k : map.incidences)
                for (const auto & e : orientation_edges(map, k, a[k.variable]))
                    ds.push_back({e, true});
            const auto r = propagate_orientations(inst, map, ds);
            EXPECT_FALSE(r.contradiction.has_value());
            for (const auto & d : r.implied)
                EXPECT_EQ(g.adjacent(d.edge.u, d.edge.v), d.in);
        }
    }
}

// With every orientation pinned, an even-hole-free completion exists iff
// the pinned assignment satisfies the clause. The propagator is left out so
// the generic search has to refute the falsifying case on its own.
TEST(EvenReduction, PinnedOrientationsDecideSatisfaction)
{
    for (unsigned p = 0; p < 8; ++p) {
        const auto f = single_clause(p);
        const auto [inst, map] = build_even_instance(f);
        for (const auto & a : all_assignments(3)) {
            SolveOptions opts;
            opts.seeds = pin_orientations(map, a);
            const auto r = solve(inst, PropertyId::even_hole_free, opts);
            ASSERT_NE(r.verdict, SolveVerdict::budget);
            EXPECT_EQ(r.verdict == SolveVerdict::sat, f.satisfied_by(a));
        }
    }
}

TEST(EvenReduction, SeededSearchFindsSatisfyingAssignments)
{
    std::mt19937_64 rng(71);
    for (int i = 0; i < 8; ++i) {
        const auto f = random_formula(3 + i % 4, 2, rng);
        const auto [inst, map] = build_even_instance(f);
        const auto r = solve(inst, PropertyId::even_hole_free, even_solve_options(map));
        ASSERT_EQ(r.verdict, SolveVerdict::sat);
        const auto a = extract_even_assignment(map, inst.realize(r.completion->chosen));
        ASSERT_TRUE(std::holds_alternative<Assignment>(a));
        EXPECT_TRUE(f.satisfied_by(std::get<Assignment>(a)));
    }
}
