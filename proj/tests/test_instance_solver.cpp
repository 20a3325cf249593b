#include "oracles.hpp"

#include <sandwich/error.hpp>
#include <sandwich/solver.hpp>
#include <sandwich/verify.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace sandwich;

namespace {

SandwichInstance c4_instance(std::vector<Edge> optional)
{
    return SandwichInstance(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)}, std::move(optional));
}

bool mentions(const std::vector<std::string> & errors, const std::string & needle)
{
    for (const auto & e : errors)
        if (e.find(needle) != std::string::npos)
            return true;
    return false;
}

} // namespace

TEST(Instance, Validation)
{
    EXPECT_TRUE(c4_instance({Edge(0, 2)}).valid());
    const SandwichInstance both(3, {Edge(0, 1)}, {Edge(0, 1)});
    EXPECT_TRUE(mentions(both.validate(), "edge in both classes"));
    const SandwichInstance outside(3, {Edge(0, 5)}, {});
    EXPECT_FALSE(outside.valid());
    InstanceBuilder b;
    b.add_vertex("a");
    b.add_vertex("b");
    b.forced(0, 1);
    b.optional(1, 0);
    EXPECT_THROW(b.build(), Error);
}

TEST(Instance, ForbiddenIsTheRest)
{
    const auto inst = c4_instance({Edge(0, 2)});
    EXPECT_EQ(inst.forbidden(), (std::vector<Edge>{Edge(1, 3)}));
    EXPECT_THROW(inst.realize({Edge(1, 3)}), Error);
}

TEST(Complement, Examples)
{
    const SandwichInstance k3(3, {Edge(0, 1), Edge(0, 2), Edge(1, 2)}, {});
    const auto c = complement_instance(k3);
    EXPECT_TRUE(c.forced().empty());
    EXPECT_TRUE(c.optional().empty());

    // V = {a, b, c}, forced ab, optional bc.
    const SandwichInstance abc(3, {Edge(0, 1)}, {Edge(1, 2)}, {"a", "b", "c"});
    const auto d = complement_instance(abc);
    EXPECT_EQ(d.forced(), (std::vector<Edge>{Edge(0, 2)}));
    EXPECT_EQ(d.optional(), (std::vector<Edge>{Edge(1, 2)}));
    EXPECT_EQ(d.names(), abc.names());
}

TEST(Complement, InvolutionOnRandomInstances)
{
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        const auto inst = random_instance(2 + i % 10, 12, rng);
        ASSERT_TRUE(inst.valid());
        const auto c = complement_instance(inst);
        EXPECT_EQ(c.optional(), inst.optional());
        EXPECT_EQ(c.forced(), inst.forbidden());
        EXPECT_EQ(complement_instance(c), inst);
    }
}

TEST(SandwichGraph, Membership)
{
    const auto inst = c4_instance({Edge(0, 2)});
    EXPECT_TRUE(is_sandwich_graph(inst, inst.forced_graph()));
    EXPECT_TRUE(is_sandwich_graph(inst, inst.upper_graph()));
    Graph with_forbidden = inst.upper_graph();
    with_forbidden.add_edge(1, 3);
    EXPECT_FALSE(is_sandwich_graph(inst, with_forbidden));
    Graph missing = inst.forced_graph();
    missing.remove_edge(0, 1);
    EXPECT_FALSE(is_sandwich_graph(inst, missing));
    EXPECT_THROW(is_sandwich_graph(inst, Graph(5)), Error);
}

TEST(Solve, Examples)
{
    const auto chord = c4_instance({Edge(0, 2)});
    for (auto solver : {+[](const SandwichInstance & i, PropertyId p) { return solve(i, p); },
             +[](const SandwichInstance & i, PropertyId p) { return brute_force_solve(i, p); }}) {
        const auto r = solver(chord, PropertyId::chordal);
        ASSERT_EQ(r.verdict, SolveVerdict::sat);
        EXPECT_EQ(r.completion->chosen, (std::vector<Edge>{Edge(0, 2)}));
        EXPECT_EQ(solver(c4_instance({}), PropertyId::chordal).verdict, SolveVerdict::unsat);
        EXPECT_EQ(solver(c4_instance({}), PropertyId::even_hole_free).verdict, SolveVerdict::unsat);
    }
}

TEST(Solve, BudgetExhaustion)
{
    // C8 with all chords optional needs several levels of branching.
    std::vector<Edge> forced, optional;
    for (int i = 0; i < 8; ++i)
        forced.emplace_back(i, (i + 1) % 8);
    for (Vertex u = 0; u < 8; ++u)
        for (Vertex v = u + 2; v < 8; ++v)
            if (! (u == 0 && v == 7))
                optional.emplace_back(u, v);
    const SandwichInstance inst(8, forced, optional);
    SolveOptions opts;
    opts.budget = 2;
    const auto r = solve(inst, PropertyId::chordal, opts);
    EXPECT_EQ(r.verdict, SolveVerdict::budget);
    EXPECT_FALSE(r.completion.has_value());
    EXPECT_GT(r.frontier, 0u);
    EXPECT_EQ(solve(inst, PropertyId::chordal).verdict, SolveVerdict::sat);
}

TEST(Solve, BruteForceRefusesLargeInstances)
{
    std::vector<Edge> optional;
    for (Vertex u = 0; u < 7; ++u)
        for (Vertex v = u + 1; v < 7; ++v)
            optional.emplace_back(u, v);
    ASSERT_EQ(optional.size(), 21u);
    EXPECT_THROW(brute_force_solve(SandwichInstance(7, {}, optional), PropertyId::chordal), Error);
    optional.pop_back();
    EXPECT_NO_THROW(brute_force_solve(SandwichInstance(7, {}, optional), PropertyId::chordal));
}

TEST(Solve, RejectsInvalidInstance)
{
    EXPECT_THROW(solve(SandwichInstance(3, {Edge(0, 1)}, {Edge(0, 1)}), PropertyId::chordal), Error);
}

TEST(Solve, AgreesWithNaiveOracle)
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 120; ++i) {
        const auto inst = random_instance(4 + i % 5, 10, rng);
        for (auto p : all_properties) {
            const bool expected = oracle::sandwich_exists(inst, p);
            const auto r = solve(inst, p);
            ASSERT_NE(r.verdict, SolveVerdict::budget);
            EXPECT_EQ(r.verdict == SolveVerdict::sat, expected) << to_string(p) << " case " << i;
            EXPECT_EQ(brute_force_solve(inst, p).verdict, r.verdict);
            if (r.verdict == SolveVerdict::sat) {
                const Graph g = inst.realize(r.completion->chosen);
                EXPECT_TRUE(is_sandwich_graph(inst, g));
                EXPECT_TRUE(oracle::holds(g, p));
            }
        }
    }
}

TEST(Solve, DualityOfOddHolesAndAntiholes)
{
    std::mt19937_64 rng(37);
    for (int i = 0; i < 100; ++i) {
        const auto inst = random_instance(5 + i % 4, 9, rng);
        const auto dual = complement_instance(inst);
        EXPECT_EQ(oracle::sandwich_exists(inst, PropertyId::odd_hole_free),
            oracle::sandwich_exists(dual, PropertyId::odd_antihole_free));
        EXPECT_EQ(solve(inst, PropertyId::odd_hole_free).verdict, solve(dual, PropertyId::odd_antihole_free).verdict);
    }
}

TEST(Solve, Deterministic)
{
    std::mt19937_64 rng(41);
    const auto inst = random_instance(9, 16, rng);
    const auto a = solve(inst, PropertyId::even_hole_free);
    const auto b = solve(inst, PropertyId::even_hole_free);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.nodes, b.nodes);
    if (a.completion)
        EXPECT_EQ(a.completion->chosen, b.completion->chosen);
}

TEST(PartialCompletion, DecideAndUndo)
{
    const auto inst = c4_instance({Edge(0, 2)});
    PartialCompletion pc(inst);
    EXPECT_EQ(pc.state(0, 1), PairState::forced);
    EXPECT_EQ(pc.state(1, 3), PairState::forbidden);
    EXPECT_EQ(pc.state(2, 0), PairState::undecided);
    EXPECT_TRUE(pc.decide({Edge(0, 2), true}));
    EXPECT_FALSE(pc.decide({Edge(0, 2), false}));
    EXPECT_FALSE(pc.decide({Edge(1, 3), true}));
    EXPECT_TRUE(pc.graph().adjacent(0, 2));
    EXPECT_EQ(pc.undecided_count(), 0u);
    pc.undo(Edge(0, 2));
    EXPECT_FALSE(pc.graph().adjacent(0, 2));
    EXPECT_EQ(pc.undecided_count(), 1u);
}

TEST(Oracle, SubsetCycleLengths)
{
    const auto p = induced_cycle_lengths_by_subsets(petersen_graph());
    EXPECT_EQ(std::count(p.begin(), p.end(), 5), 12);
    EXPECT_EQ(std::count(p.begin(), p.end(), 6), 10);
    EXPECT_EQ(induced_cycle_lengths_by_subsets(complete_graph(4)).size(), 4u);
}
