#include "oracles.hpp"

#include <sandwich/recognition.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace sandwich;

TEST(Chordal, C4HasWitness)
{
    const auto r = is_chordal(cycle_graph(4));
    EXPECT_EQ(r.verdict, Verdict::violated);
    EXPECT_EQ(r.certificate.cycle.length(), 4);
    EXPECT_TRUE(is_chordless_cycle(cycle_graph(4), r.certificate.cycle.vertices));
}

TEST(Chordal, CompleteGraphsHaveAnOrder)
{
    for (int n = 1; n <= 7; ++n) {
        const auto r = is_chordal(complete_graph(n));
        ASSERT_TRUE(r.holds());
        EXPECT_TRUE(is_perfect_elimination_order(complete_graph(n), r.certificate.elimination_order));
    }
}

TEST(Chordal, OrientedSixCycleIsTriangulated)
{
    // H S_X K_~X F K_X S_~X plus H K_X, K_X S_X, S_X F.
    enum { H, SX, KXn, F, KX, SXn };
    Graph g = cycle_graph(6);
    g.add_edge(H, KX);
    g.add_edge(KX, SX);
    g.add_edge(SX, F);
    const auto r = is_chordal(g);
    ASSERT_TRUE(r.holds());
    EXPECT_TRUE(is_perfect_elimination_order(g, r.certificate.elimination_order));
}

TEST(Chordal, EmptyGraph)
{
    EXPECT_TRUE(is_chordal(Graph(0)).holds());
}

TEST(Check, Examples)
{
    const auto c5 = check(cycle_graph(5), PropertyId::odd_hole_free);
    EXPECT_EQ(c5.verdict, Verdict::violated);
    EXPECT_EQ(c5.certificate.cycle, make_cycle({0, 1, 2, 3, 4}));
    EXPECT_TRUE(check(cycle_graph(6), PropertyId::berge).holds());
    EXPECT_FALSE(check(cycle_graph(4), PropertyId::even_hole_free).holds());
    // Bipartite.
    Graph k33(6);
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 3; v < 6; ++v)
            k33.add_edge(u, v);
    EXPECT_TRUE(check(k33, PropertyId::odd_hole_free).holds());
    EXPECT_TRUE(check(disjoint_union(cycle_graph(4), cycle_graph(6)), PropertyId::odd_hole_free).holds());
}

TEST(Check, C7ComplementIsAnOddAntihole)
{
    const Graph g = complement(cycle_graph(7));
    const auto r = check(g, PropertyId::odd_antihole_free);
    ASSERT_EQ(r.verdict, Verdict::violated);
    EXPECT_TRUE(r.certificate.in_complement);
    EXPECT_TRUE(certificate_verifies(g, PropertyId::odd_antihole_free, r.certificate));
    EXPECT_FALSE(check(g, PropertyId::berge).holds());
    EXPECT_TRUE(check(g, PropertyId::odd_hole_free).holds());
}

TEST(Check, PropertyNamesRoundTrip)
{
    for (auto p : all_properties)
        EXPECT_EQ(parse_property(to_string(p)), p);
    EXPECT_EQ(parse_property("c5-free"), PropertyId::c5_free);
    EXPECT_FALSE(parse_property("perfect").has_value());
}

TEST(Check, MatchesNaiveOracleOnRandomGraphs)
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 400; ++i) {
        const int n = 4 + i % 8;
        std::bernoulli_distribution coin(0.2 + 0.1 * (i % 6));
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        for (auto p : all_properties) {
            const auto r = check(g, p);
            ASSERT_NE(r.verdict, Verdict::unknown);
            EXPECT_EQ(r.holds(), oracle::holds(g, p)) << to_string(p) << " case " << i;
            if (! r.holds())
                EXPECT_TRUE(certificate_verifies(g, p, r.certificate));
        }
    }
}

TEST(Check, ChordalIffNoHoleUpToSevenVertices)
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + i % 7;
        std::bernoulli_distribution coin(0.5);
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        CycleQuery q;
        q.min_length = 4;
        EXPECT_EQ(is_chordal(g).holds(), ! find_chordless_cycle(g, q).cycle.has_value());
    }
}

TEST(Check, C5SubsetScanAgreesWithSearch)
{
    const Graph p = petersen_graph();
    EXPECT_TRUE(find_c5_by_subsets(p).has_value());
    EXPECT_FALSE(find_c5_by_subsets(cycle_graph(6)).has_value());
    EXPECT_FALSE(check(cycle_graph(7), PropertyId::odd_hole_free).holds());
    EXPECT_TRUE(check(cycle_graph(7), PropertyId::c5_free).holds());
}

TEST(Certificate, RejectsForgedWitness)
{
    const Graph g = complete_graph(5);
    const auto fake = Certificate::violation(make_cycle({0, 1, 2, 3, 4}));
    EXPECT_FALSE(certificate_verifies(g, PropertyId::odd_hole_free, fake));
    const auto even_for_odd = Certificate::violation(make_cycle({0, 1, 2, 3}));
    EXPECT_FALSE(certificate_verifies(cycle_graph(4), PropertyId::odd_hole_free, even_for_odd));
}
