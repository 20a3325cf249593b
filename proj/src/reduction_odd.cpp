#include <sandwich/error.hpp>
#include <sandwich/reduction_odd.hpp>

#include <map>
#include <set>

namespace sandwich {

namespace {
    class OddBuilder {
    public:
        FiveCycleGadget five_cycle(const std::string & prefix)
        {
            FiveCycleGadget g;
            for (int k = 0; k < 5; ++k)
                g.cycle[k] = b_.add_vertex(prefix + "." + std::to_string(k));
            for (int k = 0; k < 5; ++k)
                b_.forced(g.cycle[k], g.cycle[(k + 1) % 5]);
            b_.optional(g.true_chord().u, g.true_chord().v);
            b_.optional(g.false_chord().u, g.false_chord().v);
            return g;
        }

        // Forced five-cycle a b w c d closed by the optional edges ab and cd:
        // b-w-c is a connector path and d-a a direct forced edge. Every chord
        // of that cycle stays forbidden, so ab and cd are never both present
        // in a C5-free sandwich graph.
        void exclusion(Vertex a, Vertex b, Vertex c, Vertex d)
        {
            const Vertex w = b_.add_vertex("w" + std::to_string(map_.connectors.size() + 1));
            map_.connectors.push_back(w);
            b_.forced(b, w);
            b_.forced(w, c);
            b_.forced(d, a);
        }

        InstanceBuilder b_;
        OddGadgetMap map_;
    };
} // namespace

std::pair<SandwichInstance, OddGadgetMap> build_c5_instance(const CnfFormula & f)
{
    f.require_valid();
    OddBuilder ob;
    auto & b = ob.b_;
    auto & map = ob.map_;

    for (int i = 0; i < f.variables; ++i)
        map.variables.push_back(ob.five_cycle("X" + std::to_string(i + 1)));

    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const std::string cj = std::to_string(j + 1);
        ClauseGadget cg;
        for (int k = 0; k < 5; ++k)
            cg.p[k] = b.add_vertex("p" + cj + "." + std::to_string(k + 1));
        for (int q = 0; q < 3; ++q) {
            const std::string tag = cj + "." + std::to_string(q + 1);
            cg.z[q] = b.add_vertex("z" + tag);
            cg.t[q] = b.add_vertex("t" + tag);
            cg.l[q] = b.add_vertex("l" + tag);
        }
        for (int q = 0; q < 3; ++q)
            b.optional(cg.p[q], cg.p[q + 1]);
        b.forced(cg.p[3], cg.p[4]);
        b.forced(cg.p[4], cg.p[0]);
        for (int q = 0; q < 3; ++q) {
            b.forced(cg.p[q], cg.z[q]);
            b.forced(cg.z[q], cg.t[q]);
            b.forced(cg.t[q], cg.p[q + 1]);
            b.forced(cg.p[q + 1], cg.l[q]);
            b.forced(cg.l[q], cg.p[q]);
            b.optional(cg.t[q], cg.l[q]);
        }

        for (int q = 0; q < 3; ++q) {
            const Literal lit = f.clauses[j][q];
            const std::string tag = cj + "." + std::to_string(q + 1);
            auto & lg = cg.literals[q];
            lg.literal = lit;
            lg.r = ob.five_cycle("r" + tag);
            lg.s = ob.five_cycle("s" + tag);
            const auto & x = map.variables[lit.var];
            // r: false chord of x excludes r's true chord.
            ob.exclusion(x.cycle[1], x.cycle[3], lg.r.cycle[0], lg.r.cycle[2]);
            // s: true chord of x excludes s's true chord.
            ob.exclusion(x.cycle[0], x.cycle[2], lg.s.cycle[0], lg.s.cycle[2]);
            // The copy whose false chord means "literal false" excludes the link.
            const auto & copy = lit.positive ? lg.r : lg.s;
            ob.exclusion(cg.t[q], cg.l[q], copy.cycle[1], copy.cycle[3]);
        }
        map.clauses.push_back(cg);
    }
    return {b.build(), map};
}

std::pair<SandwichInstance, OddGadgetMap> build_odd_hole_free_instance(const CnfFormula & f)
{
    auto [inst, map] = build_c5_instance(f);
    return {complement_instance(inst), std::move(map)};
}

Graph c5_completion_from_assignment(
    const SandwichInstance & c5_instance, const OddGadgetMap & map, const CnfFormula & f, const Assignment & a)
{
    if (static_cast<int>(a.size()) != f.variables)
        throw Error("assignment size does not match the formula");
    std::vector<Edge> chosen;
    auto pick = [&](const FiveCycleGadget & g, bool value) { chosen.push_back(value ? g.true_chord() : g.false_chord()); };
    for (int i = 0; i < f.variables; ++i)
        pick(map.variables[i], a[i]);
    for (const auto & cg : map.clauses)
        for (int q = 0; q < 3; ++q) {
            const auto & lg = cg.literals[q];
            const bool value = a[lg.literal.var];
            pick(lg.r, value);
            pick(lg.s, ! value);
            if (value == lg.literal.positive)
                chosen.push_back(cg.link_edge(q));
            else
                chosen.push_back(cg.literal_edge(q));
        }
    return c5_instance.realize(chosen);
}

Graph p4_plus_p1_complement() { return complement(disjoint_union(path_graph(4), Graph(1))); }

Graph p6_complement() { return complement(path_graph(6)); }

StructuralReport structural_report(const SandwichInstance & inst)
{
    StructuralReport report;
    const Graph g1 = inst.forced_graph();
    const Graph g2 = inst.upper_graph();

    if (auto t = triangles(g1); ! t.empty()) {
        report.forced_triangle_free.passed = false;
        report.forced_triangle_free.witness.assign(t.front().begin(), t.front().end());
        report.forced_triangle_free.detail = "forced triangle";
    }

    // Optional-edge graph: each component must be an isolated vertex, an
    // edge, or a path with three edges.
    {
        Graph opt(inst.order(), inst.optional());
        VertexSet seen(inst.order());
        for (Vertex s = 0; s < inst.order() && report.optional_components_are_paths.passed; ++s) {
            if (seen.contains(s))
                continue;
            std::vector<Vertex> comp{s};
            seen.insert(s);
            for (std::size_t k = 0; k < comp.size(); ++k)
                opt.neighbors(comp[k]).for_each([&](Vertex u) {
                    if (! seen.contains(u)) {
                        seen.insert(u);
                        comp.push_back(u);
                    }
                });
            std::size_t degree_sum = 0;
            int max_degree = 0;
            for (auto v : comp) {
                degree_sum += static_cast<std::size_t>(opt.degree(v));
                max_degree = std::max(max_degree, opt.degree(v));
            }
            const std::size_t edges = degree_sum / 2;
            // Connected, so a tree iff edges == |comp| - 1; a path iff max degree <= 2.
            const bool is_path = edges + 1 == comp.size() && max_degree <= 2;
            if (! is_path || (comp.size() != 1 && comp.size() != 2 && comp.size() != 4)) {
                report.optional_components_are_paths.passed = false;
                report.optional_components_are_paths.witness = comp;
                report.optional_components_are_paths.detail = "optional component with " + std::to_string(comp.size())
                    + " vertices and " + std::to_string(edges) + " edges";
            }
        }
    }

    {
        const auto tris = triangles(g2);
        std::map<Edge, int> uses;
        for (const auto & t : tris) {
            ++uses[Edge(t[0], t[1])];
            ++uses[Edge(t[0], t[2])];
            ++uses[Edge(t[1], t[2])];
        }
        for (const auto & t : tris) {
            const std::array<Edge, 3> sides{Edge(t[0], t[1]), Edge(t[0], t[2]), Edge(t[1], t[2])};
            int optional_sides = 0, shared = 0;
            bool shared_ok = true;
            for (const auto & e : sides) {
                const bool forced = g1.adjacent(e.u, e.v);
                optional_sides += ! forced;
                if (uses[e] > 1) {
                    ++shared;
                    shared_ok = shared_ok && forced && uses[e] == 2;
                }
            }
            if (optional_sides != 1 || shared != 1 || ! shared_ok) {
                report.triangles_paired.passed = false;
                report.triangles_paired.witness.assign(t.begin(), t.end());
                report.triangles_paired.detail = optional_sides != 1
                    ? "triangle with " + std::to_string(optional_sides) + " optional edges"
                    : "triangle shares " + std::to_string(shared) + " edges with other triangles";
                break;
            }
        }
    }

    if (auto m = find_subgraph(g2, p4_plus_p1_complement(), false)) {
        report.no_p4_p1_complement.passed = false;
        report.no_p4_p1_complement.witness = *m;
        report.no_p4_p1_complement.detail = "(P4+P1)^c subgraph";
    }
    return report;
}

std::variant<Assignment, MissingChord> extract_odd_assignment(const OddGadgetMap & map, const Graph & g)
{
    Assignment a(map.variables.size());
    for (std::size_t i = 0; i < map.variables.size(); ++i) {
        const auto & x = map.variables[i];
        const bool t = g.adjacent(x.true_chord().u, x.true_chord().v);
        const bool f = g.adjacent(x.false_chord().u, x.false_chord().v);
        if (! t && ! f)
            return MissingChord{static_cast<int>(i), make_cycle({x.cycle.begin(), x.cycle.end()})};
        a[i] = t;
    }
    return a;
}

} // namespace sandwich
