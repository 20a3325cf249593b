#include <sandwich/error.hpp>
#include <sandwich/reduction_even.hpp>
#include <sandwich/reduction_odd.hpp>
#include <sandwich/recognition.hpp>
#include <sandwich/solver.hpp>
#include <sandwich/verify.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sandwich {

std::vector<int> induced_cycle_lengths_by_subsets(const Graph & g)
{
    const int n = g.order();
    if (n > 16)
        throw Error("subset oracle limited to 16 vertices");
    std::vector<unsigned> nbr(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        g.neighbors(v).for_each([&](Vertex u) { nbr[v] |= 1U << u; });
    std::vector<int> lengths;
    for (unsigned s = 1; s < (1U << n); ++s) {
        const int k = std::popcount(s);
        if (k < 3)
            continue;
        bool two_regular = true;
        for (Vertex v = 0; v < n && two_regular; ++v)
            if ((s >> v) & 1)
                two_regular = std::popcount(nbr[v] & s) == 2;
        if (! two_regular)
            continue;
        // Connected 2-regular means a single cycle.
        unsigned reach = s & (~s + 1);
        while (true) {
            unsigned next = reach;
            for (Vertex v = 0; v < n; ++v)
                if ((reach >> v) & 1)
                    next |= nbr[v] & s;
            if (next == reach)
                break;
            reach = next;
        }
        if (reach == s)
            lengths.push_back(k);
    }
    return lengths;
}

SandwichInstance random_instance(int order, std::size_t max_optional, std::mt19937_64 & rng)
{
    // A forced cycle through a random subset of the vertices, its chords
    // first in line to become optional, and the rest of the pairs forced
    // or forbidden at random. Without the planted cycle nearly every
    // instance is trivially satisfiable.
    std::vector<Vertex> perm(static_cast<std::size_t>(order));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const int len = order >= 4 ? std::uniform_int_distribution<int>(4, order)(rng) : 0;
    std::set<Edge> forced_set, chord_set;
    for (int i = 0; i < len; ++i)
        forced_set.insert(Edge(perm[i], perm[(i + 1) % len]));
    std::vector<Edge> chords, others;
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v) {
            if (forced_set.contains(Edge(u, v)))
                continue;
            const bool on_cycle = std::find(perm.begin(), perm.begin() + len, u) != perm.begin() + len
                && std::find(perm.begin(), perm.begin() + len, v) != perm.begin() + len;
            (on_cycle ? chords : others).emplace_back(u, v);
        }
    std::shuffle(chords.begin(), chords.end(), rng);
    std::shuffle(others.begin(), others.end(), rng);
    std::vector<Edge> pool = chords;
    pool.insert(pool.end(), others.begin(), others.end());

    const std::size_t cap = std::min(max_optional, pool.size());
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, cap)(rng);
    // Mix the planted chords with other pairs so the optional set is not
    // always the chords alone.
    std::shuffle(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(std::min(pool.size(), k + k / 2)), rng);
    std::vector<Edge> optional(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.2, 0.6)(rng));
    std::vector<Edge> forced(forced_set.begin(), forced_set.end());
    for (std::size_t i = k; i < pool.size(); ++i)
        if (coin(rng))
            forced.push_back(pool[i]);
    return SandwichInstance(order, std::move(forced), std::move(optional));
}

namespace {
    using Clock = std::chrono::steady_clock;

    struct Tally {
        int cases = 0;
        int failures = 0;
        std::string first_failure;

        void expect(bool ok, const std::string & what)
        {
            ++cases;
            if (! ok && failures++ == 0)
                first_failure = what;
        }
    };

    std::string summary(const Tally & t, const std::string & extra = "")
    {
        std::ostringstream s;
        s << (t.cases - t.failures) << "/" << t.cases << " correct";
        if (! extra.empty())
            s << "; " << extra;
        if (t.failures)
            s << "; first failure: " << t.first_failure;
        return s.str();
    }

    std::string formula_text(const CnfFormula & f)
    {
        std::string s;
        for (const auto & c : f.clauses) {
            s += "(";
            for (int q = 0; q < 3; ++q)
                s += (q ? "+" : "") + literal_name(c[q]);
            s += ")";
        }
        return s;
    }

    // 1. Recognition against the subset oracle on every labelled 6-vertex graph.
    std::string recognition_oracle(Tally & t, const SuiteOptions &)
    {
        const int n = 6;
        std::vector<Edge> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);
        const PropertyId props[] = {
            PropertyId::chordal, PropertyId::c5_free, PropertyId::odd_hole_free, PropertyId::even_hole_free};
        for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
            Graph g(n);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1)
                    g.add_edge(pairs[i].u, pairs[i].v);
            const auto lengths = induced_cycle_lengths_by_subsets(g);
            auto any = [&](auto pred) { return std::any_of(lengths.begin(), lengths.end(), pred); };
            const bool expected[] = {
                ! any([](int k) { return k >= 4; }),
                ! any([](int k) { return k == 5; }),
                ! any([](int k) { return k >= 5 && k % 2 == 1; }),
                ! any([](int k) { return k >= 4 && k % 2 == 0; }),
            };
            for (int p = 0; p < 4; ++p) {
                const auto r = check(g, props[p]);
                bool ok = r.verdict != Verdict::unknown && r.holds() == expected[p];
                if (ok && ! r.holds())
                    ok = certificate_verifies(g, props[p], r.certificate);
                t.expect(ok, "graph mask " + std::to_string(mask) + " property " + std::string(to_string(props[p])));
            }
        }
        return "2^15 graphs x 4 properties";
    }

    // 2. Complement duality of the sandwich problem.
    std::string complement_duality(Tally & t, const SuiteOptions & o)
    {
        std::mt19937_64 rng(o.seed);
        int sat = 0;
        for (int i = 0; i < 200; ++i) {
            const int order = std::uniform_int_distribution<int>(4, 10)(rng);
            const auto inst = random_instance(order, 12, rng);
            const auto dual = complement_instance(inst);
            const auto a = brute_force_solve(inst, PropertyId::odd_hole_free).verdict;
            const auto b = brute_force_solve(dual, PropertyId::odd_antihole_free).verdict;
            const auto c = brute_force_solve(inst, PropertyId::odd_antihole_free).verdict;
            const auto d = brute_force_solve(dual, PropertyId::odd_hole_free).verdict;
            sat += a == SolveVerdict::sat;
            t.expect(a == b && c == d, "instance " + std::to_string(i));
        }
        return std::to_string(sat) + " of 200 odd-hole-free instances SAT";
    }

    // 3. Backtracking solver against brute force.
    std::string solver_exactness(Tally & t, const SuiteOptions & o)
    {
        std::mt19937_64 rng(o.seed + 3);
        std::ostringstream extra;
        for (auto p : all_properties) {
            int sat = 0;
            for (int i = 0; i < 100; ++i) {
                const int order = std::uniform_int_distribution<int>(4, 9)(rng);
                const auto inst = random_instance(order, 16, rng);
                const auto fast = solve(inst, p);
                const auto slow = brute_force_solve(inst, p);
                bool ok = fast.verdict == slow.verdict;
                if (ok && fast.verdict == SolveVerdict::sat) {
                    const Graph g = inst.realize(fast.completion->chosen);
                    ok = is_sandwich_graph(inst, g) && check(g, p).holds();
                    ++sat;
                }
                t.expect(ok, std::string(to_string(p)) + " instance " + std::to_string(i));
            }
            extra << to_string(p) << " " << sat << " SAT; ";
        }
        return extra.str();
    }

    // 4. Structural invariants of the C5 construction.
    std::string odd_structure(Tally & t, const SuiteOptions & o)
    {
        std::mt19937_64 rng(o.seed + 4);
        for (int i = 0; i < 100; ++i) {
            const int n = std::uniform_int_distribution<int>(3, 6)(rng);
            const int m = std::uniform_int_distribution<int>(1, 6)(rng);
            const auto f = random_formula(n, m, rng);
            const auto rep = structural_report(build_c5_instance(f).first);
            t.expect(rep.all_passed(), formula_text(f));
        }
        return "four checks per formula";
    }

    // 5. C5 / odd-hole construction end to end on single clauses.
    std::string odd_end_to_end(Tally & t, const SuiteOptions &)
    {
        const Graph p6c = p6_complement();
        std::uint64_t max_nodes = 0;
        for (unsigned pattern = 0; pattern < 8; ++pattern) {
            const auto f = single_clause(pattern);
            const auto [inst, map] = build_c5_instance(f);
            const auto r = solve(inst, PropertyId::c5_free);
            max_nodes = std::max(max_nodes, r.nodes);
            const std::string what = formula_text(f);
            if (r.verdict != SolveVerdict::sat) {
                t.expect(false, what + ": " + std::string(to_string(r.verdict)));
                continue;
            }
            const Graph g = inst.realize(r.completion->chosen);
            const auto a = extract_odd_assignment(map, g);
            t.expect(std::holds_alternative<Assignment>(a) && f.satisfied_by(std::get<Assignment>(a)),
                what + ": extracted assignment");
            t.expect(check(g, PropertyId::odd_antihole_free).holds(), what + ": odd antihole");
            t.expect(! contains_induced_subgraph(g, p6c), what + ": induced P6^c");

            // Same search on the complemented instance, for odd-hole-free.
            const auto dual = complement_instance(inst);
            const auto rd = solve(dual, PropertyId::odd_hole_free);
            bool dual_ok = rd.verdict == SolveVerdict::sat;
            if (dual_ok) {
                const Graph h = dual.realize(rd.completion->chosen);
                const auto b = extract_odd_assignment(map, complement(h));
                dual_ok = check(h, PropertyId::odd_hole_free).holds() && std::holds_alternative<Assignment>(b)
                    && f.satisfied_by(std::get<Assignment>(b));
            }
            t.expect(dual_ok, what + ": odd-hole-free instance");
        }
        return "max search nodes " + std::to_string(max_nodes);
    }

    // 6. Completion from an assignment, every pattern and assignment.
    std::string even_forward(Tally & t, const SuiteOptions &)
    {
        for (unsigned pattern = 0; pattern < 8; ++pattern) {
            const auto f = single_clause(pattern);
            const auto [inst, map] = build_even_instance(f);
            for (const auto & a : all_assignments(3)) {
                const Graph g = completion_from_assignment(f, a, map);
                const bool satisfied = f.satisfied_by(a);
                const auto r = check(g, PropertyId::even_hole_free);
                bool ok = is_sandwich_graph(inst, g) && r.verdict != Verdict::unknown && r.holds() == satisfied;
                if (ok && ! satisfied) {
                    // A C4 on two active and two inactive knees of the clause.
                    const auto act = map.active_knees(0);
                    const auto ina = map.inactive_knees(0);
                    std::vector<Vertex> knees(act.begin(), act.end());
                    knees.insert(knees.end(), ina.begin(), ina.end());
                    const Graph k = induced(g, knees);
                    CycleQuery q;
                    q.min_length = 4;
                    q.max_length = 4;
                    const auto c4 = find_chordless_cycle(k, q);
                    ok = c4.cycle.has_value();
                    if (ok) {
                        int active = 0;
                        for (auto v : c4.cycle->vertices)
                            active += v < 3;
                        ok = active == 2;
                    }
                }
                std::string bits;
                for (bool b : a)
                    bits += b ? '1' : '0';
                t.expect(ok, formula_text(f) + " under " + bits);
            }
        }
        return "8 patterns x 8 assignments";
    }

    // 7. The forcing chain when all three literals of (X+Y+Z) are false.
    std::string even_propagation(Tally & t, const SuiteOptions &)
    {
        const auto f = single_clause(0);
        const auto [inst, map] = build_even_instance(f);
        std::vector<Decision> decided;
        for (const auto & k : map.incidences)
            for (const auto & e : orientation_edges(map, k, false))
                decided.push_back({e, true});
        const auto r = propagate_orientations(inst, map, decided);

        auto kn = [&](int var, bool positive) { return map.knee(Literal{var, positive}, 0); };
        const Vertex kx = kn(0, true), ky = kn(1, true), kxn = kn(0, false), kyn = kn(1, false), kzn = kn(2, false);
        auto implied_in = [&](Vertex a, Vertex b) {
            return std::find(r.implied.begin(), r.implied.end(), Decision{Edge(a, b), true}) != r.implied.end();
        };
        t.expect(implied_in(kzn, kxn), "K_~z K_~x derived");
        t.expect(implied_in(kxn, kyn), "K_~x K_~y derived");
        t.expect(implied_in(ky, kxn), "K_y K_~x derived");
        t.expect(r.contradiction.has_value(), "contradiction reached");
        if (r.contradiction) {
            t.expect(r.contradiction->certificate == make_cycle({kx, ky, kxn, kyn}), "certificate is C4 K_x K_y K_~x K_~y");
            PartialCompletion pc(inst);
            for (const auto & d : decided)
                pc.decide(d);
            for (const auto & d : r.implied)
                pc.decide(d);
            const auto & c = r.contradiction->certificate.vertices;
            const bool chords_excluded = pc.excluded(c[0], c[2]) && pc.excluded(c[1], c[3]);
            t.expect(is_chordless_cycle(pc.graph(), c) && chords_excluded, "certificate re-verifies");
        }
        return r.contradiction ? "rule " + r.contradiction->rule : "no contradiction";
    }

    // 8. Vertex and edge counts of the (X+Y+Z) head/foot instance.
    std::string even_census(Tally & t, const SuiteOptions &)
    {
        const auto [inst, map] = build_even_instance(single_clause(0));
        const auto forbidden = inst.forbidden();
        t.expect(inst.order() == 16, "|V| = " + std::to_string(inst.order()));
        t.expect(inst.forced().size() == 27, "|forced| = " + std::to_string(inst.forced().size()));
        t.expect(forbidden.size() == 33, "|forbidden| = " + std::to_string(forbidden.size()));
        t.expect(inst.optional().size() == 60, "|optional| = " + std::to_string(inst.optional().size()));
        const Graph g2 = inst.upper_graph();
        t.expect(g2.degree(map.w1) == 2 && g2.degree(map.w2) == 2, "W1, W2 degree 2 in G2'");
        std::set<Vertex> touched;
        bool matching = true;
        for (const auto & e : forbidden) {
            if (e.u == map.w1 || e.u == map.w2 || e.v == map.w1 || e.v == map.w2)
                continue;
            matching = matching && touched.insert(e.u).second && touched.insert(e.v).second;
        }
        t.expect(matching, "E3 restricted to V is a matching");
        return "|V|=" + std::to_string(inst.order()) + " |E1|=" + std::to_string(inst.forced().size()) + " |E3|="
            + std::to_string(forbidden.size()) + " |E2\\E1|=" + std::to_string(inst.optional().size());
    }

    // 9. Seeded even-hole-free search on formulas with at most two clauses.
    std::string even_end_to_end(Tally & t, const SuiteOptions & o)
    {
        std::vector<CnfFormula> formulas;
        for (unsigned pattern = 0; pattern < 8; ++pattern)
            formulas.push_back(single_clause(pattern));
        std::mt19937_64 rng(o.seed + 9);
        for (int i = 0; i < 40; ++i)
            formulas.push_back(random_formula(3 + i % 4, 2, rng));
        std::uint64_t max_nodes = 0;
        for (const auto & f : formulas) {
            const auto [inst, map] = build_even_instance(f);
            const auto r = solve(inst, PropertyId::even_hole_free, even_solve_options(map));
            max_nodes = std::max(max_nodes, r.nodes);
            bool ok = r.verdict == SolveVerdict::sat;
            if (ok) {
                const Graph g = inst.realize(r.completion->chosen);
                const auto a = extract_even_assignment(map, g);
                ok = check(g, PropertyId::even_hole_free).holds() && std::holds_alternative<Assignment>(a)
                    && f.satisfied_by(std::get<Assignment>(a));
            }
            t.expect(ok, formula_text(f) + ": " + std::string(to_string(r.verdict)));
        }
        return std::to_string(formulas.size()) + " formulas, max search nodes " + std::to_string(max_nodes);
    }

    struct SuiteSpec {
        std::string name;
        double limit_seconds;
        std::function<std::string(Tally &, const SuiteOptions &)> body;
    };

    const std::vector<SuiteSpec> & registry()
    {
        static const std::vector<SuiteSpec> suites{
            {"recognition-oracle", 300, recognition_oracle},
            {"complement-duality", 300, complement_duality},
            {"solver-exactness", 600, solver_exactness},
            {"odd-structure", 120, odd_structure},
            {"odd-end-to-end", 300, odd_end_to_end},
            {"even-forward", 120, even_forward},
            {"even-propagation", 1, even_propagation},
            {"even-census", 1, even_census},
            {"even-end-to-end", 900, even_end_to_end},
        };
        return suites;
    }
} // namespace

const std::vector<std::string> & suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto & s : registry())
            out.push_back(s.name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string & name, const SuiteOptions & options)
{
    for (const auto & s : registry()) {
        if (s.name != name)
            continue;
        SuiteResult r;
        r.name = name;
        r.time_limit_seconds = s.limit_seconds;
        Tally t;
        const auto start = Clock::now();
        std::string extra;
        try {
            extra = s.body(t, options);
        }
        catch (const std::exception & e) {
            t.expect(false, std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        r.passed = t.failures == 0 && t.cases > 0 && r.seconds < s.limit_seconds;
        r.detail = summary(t, extra);
        if (r.seconds >= s.limit_seconds)
            r.detail += "; over the time limit";
        return r;
    }
    throw Error("unknown suite '" + name + "'");
}

} // namespace sandwich
