#include <sandwich/cnf.hpp>
#include <sandwich/error.hpp>
#include <sandwich/io.hpp>
#include <sandwich/reduction_even.hpp>
#include <sandwich/reduction_odd.hpp>
#include <sandwich/verify.hpp>

#include <gtest/gtest.h>

using namespace sandwich;

TEST(Dimacs, ParsesAndRoundTrips)
{
    const std::string text = "c a comment\np cnf 4 2\n1 -2 3 0\n-1 2 4 0\n";
    const auto f = parse_dimacs(text);
    ASSERT_EQ(f.variables, 4);
    ASSERT_EQ(f.clauses.size(), 2u);
    EXPECT_EQ(f.clauses[0][1], (Literal{1, false}));
    EXPECT_EQ(parse_dimacs(to_dimacs(f)), f);
    EXPECT_EQ(to_dimacs(parse_dimacs(to_dimacs(f))), to_dimacs(f));
}

TEST(Dimacs, RejectsMalformedClauses)
{
    EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 0\n"), ParseError);
    EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 3 -1 0\n"), ParseError);
    EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 1 2 0\n"), ParseError);
    EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 -1 2 0\n"), ParseError);
    EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 4 0\n"), ParseError);
    EXPECT_THROW(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), ParseError);
    EXPECT_THROW(parse_dimacs("1 2 3 0\n"), ParseError);
    try {
        parse_dimacs("p cnf 3 1\n1 x 3 0\n");
        FAIL();
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.line(), 2);
    }
}

TEST(Cnf, Evaluation)
{
    const auto f = single_clause(0b101); // (~x1 + x2 + ~x3)
    EXPECT_FALSE(f.satisfied_by({true, false, true}));
    EXPECT_TRUE(f.satisfied_by({false, false, true}));
    EXPECT_EQ(all_assignments(3).size(), 8u);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i)
        EXPECT_TRUE(random_formula(3 + i % 4, 1 + i % 6, rng).validate().empty());
}

TEST(InstanceFile, RoundTripIsByteExact)
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        const auto inst = random_instance(1 + i % 12, 14, rng);
        const auto text = serialize_instance(inst);
        const auto back = parse_instance(text);
        EXPECT_EQ(back.forced(), inst.forced());
        EXPECT_EQ(back.optional(), inst.optional());
        EXPECT_EQ(serialize_instance(back), text);
        const auto twice = serialize_instance(complement_instance(complement_instance(back)));
        EXPECT_EQ(twice, text);
    }
    const auto [even, map] = build_even_instance(single_clause(0));
    EXPECT_EQ(parse_instance(serialize_instance(even)), even);
    const auto [odd, omap] = build_odd_hole_free_instance(random_formula(4, 3, rng));
    EXPECT_EQ(parse_instance(serialize_instance(odd)), odd);
}

TEST(InstanceFile, ParseErrors)
{
    EXPECT_THROW(parse_instance(""), ParseError);
    EXPECT_THROW(parse_instance("sandwich 2\nf 0 2\n"), ParseError);
    EXPECT_THROW(parse_instance("sandwich 2\nf 0 0\n"), ParseError);
    EXPECT_THROW(parse_instance("sandwich 2\nf 0 1\no 1 0\n"), ParseError);
    EXPECT_THROW(parse_instance("sandwich 2\nq 0 1\n"), ParseError);
    EXPECT_NO_THROW(parse_instance("# header\nsandwich 2\n\nv 0 a\nf 0 1\n"));
}

TEST(CompletionFile, RoundTrip)
{
    Completion c{{Edge(3, 4), Edge(0, 2)}};
    const auto text = serialize_completion(c);
    EXPECT_EQ(text, "completion 2\ne 0 2\ne 3 4\n");
    EXPECT_EQ(parse_completion(text).chosen, (std::vector<Edge>{Edge(0, 2), Edge(3, 4)}));
    EXPECT_THROW(parse_completion("completion 3\ne 0 2\n"), ParseError);
    EXPECT_THROW(parse_completion("completion 2\ne 0 2\ne 2 0\n"), ParseError);
}

TEST(Dot, EdgeStylesAndLabels)
{
    const SandwichInstance inst(3, {Edge(0, 1)}, {Edge(1, 2)}, {"H", "S_x1", "K_x1^1"});
    const auto dot = to_dot(inst);
    EXPECT_NE(dot.find("0 -- 1 [style=solid]"), std::string::npos);
    EXPECT_NE(dot.find("1 -- 2 [style=dashed]"), std::string::npos);
    EXPECT_EQ(dot.find("0 -- 2"), std::string::npos);
    EXPECT_NE(dot.find("label=\"K_x1^1\""), std::string::npos);
    DotOptions opts;
    opts.completion = Completion{{Edge(1, 2)}};
    EXPECT_NE(to_dot(inst, opts).find("1 -- 2 [style=bold]"), std::string::npos);
}
