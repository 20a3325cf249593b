#include <sandwich/error.hpp>
#include <sandwich/io.hpp>
#include <sandwich/reduction_even.hpp>
#include <sandwich/reduction_odd.hpp>
#include <sandwich/solver.hpp>
#include <sandwich/verify.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sandwich;

namespace {

using EdgeTuple = std::pair<Vertex, Vertex>;

std::vector<Edge> to_edges(const std::vector<EdgeTuple> & es)
{
    std::vector<Edge> out;
    out.reserve(es.size());
    for (auto [u, v] : es)
        out.emplace_back(u, v);
    return out;
}

std::vector<EdgeTuple> to_tuples(const std::vector<Edge> & es)
{
    std::vector<EdgeTuple> out;
    out.reserve(es.size());
    for (const auto & e : es)
        out.emplace_back(e.u, e.v);
    return out;
}

Graph make_graph(int order, const std::vector<EdgeTuple> & edges)
{
    const auto es = to_edges(edges);
    return Graph(order, es);
}

PropertyId property(const std::string & name)
{
    auto p = parse_property(name);
    if (! p)
        throw py::value_error("unknown property '" + name + "'");
    return *p;
}

// Formulas cross the boundary as DIMACS-style integer triples.
CnfFormula to_formula(int variables, const std::vector<std::array<int, 3>> & clauses)
{
    CnfFormula f;
    f.variables = variables;
    for (const auto & c : clauses) {
        Clause cl;
        for (int q = 0; q < 3; ++q) {
            if (c[q] == 0)
                throw py::value_error("literal 0 in clause");
            cl[q] = Literal{std::abs(c[q]) - 1, c[q] > 0};
        }
        f.clauses.push_back(cl);
    }
    f.require_valid();
    return f;
}

std::vector<std::array<int, 3>> from_formula(const CnfFormula & f)
{
    std::vector<std::array<int, 3>> out;
    for (const auto & c : f.clauses) {
        std::array<int, 3> t{};
        for (int q = 0; q < 3; ++q)
            t[q] = (c[q].var + 1) * (c[q].positive ? 1 : -1);
        out.push_back(t);
    }
    return out;
}

struct OddReduction {
    SandwichInstance instance;
    OddGadgetMap map;
    bool complemented = false;

    std::vector<bool> extract(const std::vector<EdgeTuple> & chosen) const
    {
        Graph g = instance.realize(to_edges(chosen));
        const auto a = extract_odd_assignment(map, complemented ? complement(g) : g);
        if (const auto * m = std::get_if<MissingChord>(&a))
            throw py::value_error("variable gadget x" + std::to_string(m->variable + 1) + " has no chord");
        return std::get<Assignment>(a);
    }
};

struct EvenReduction {
    SandwichInstance instance;
    EvenGadgetMap map;

    std::vector<bool> extract(const std::vector<EdgeTuple> & chosen) const
    {
        const auto a = extract_even_assignment(map, instance.realize(to_edges(chosen)));
        if (const auto * e = std::get_if<OrientationError>(&a))
            throw py::value_error(std::string(e->kind == OrientationError::Kind::mixed ? "mixed" : "missing")
                + " orientation of x" + std::to_string(e->variable + 1));
        return std::get<Assignment>(a);
    }
};

py::dict solve_result(const SolveResult & r)
{
    py::dict d;
    d["verdict"] = std::string(to_string(r.verdict));
    d["chosen"] = r.completion ? py::cast(to_tuples(r.completion->chosen)) : py::none();
    d["nodes"] = r.nodes;
    d["frontier"] = r.frontier;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Sandwich problems for hole-free graph classes";

    // Later registrations are tried first, so the subclass goes last.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.attr("properties") = [] {
        std::vector<std::string> names;
        for (auto p : all_properties)
            names.emplace_back(to_string(p));
        return names;
    }();

    py::class_<SandwichInstance>(m, "Instance")
        .def(py::init([](int order, const std::vector<EdgeTuple> & forced, const std::vector<EdgeTuple> & optional,
                          std::vector<std::string> names) {
            return SandwichInstance(order, to_edges(forced), to_edges(optional), std::move(names));
        }),
            py::arg("order"), py::arg("forced"), py::arg("optional") = std::vector<EdgeTuple>{},
            py::arg("names") = std::vector<std::string>{})
        .def_property_readonly("order", &SandwichInstance::order)
        .def_property_readonly("forced", [](const SandwichInstance & i) { return to_tuples(i.forced()); })
        .def_property_readonly("optional", [](const SandwichInstance & i) { return to_tuples(i.optional()); })
        .def_property_readonly("forbidden", [](const SandwichInstance & i) { return to_tuples(i.forbidden()); })
        .def_property_readonly("names", &SandwichInstance::names)
        .def("label", &SandwichInstance::label)
        .def("validate", &SandwichInstance::validate, "List of problems; empty when well formed.")
        .def("complement", &complement_instance)
        .def("to_text", &serialize_instance)
        .def_static("from_text", &parse_instance)
        .def("to_dot", [](const SandwichInstance & i, std::optional<std::vector<EdgeTuple>> chosen) {
            DotOptions o;
            if (chosen)
                o.completion = Completion{to_edges(*chosen)};
            return to_dot(i, o);
        }, py::arg("chosen") = py::none())
        .def("is_sandwich_graph", [](const SandwichInstance & i, const std::vector<EdgeTuple> & edges) {
            return is_sandwich_graph(i, make_graph(i.order(), edges));
        })
        .def("__eq__", [](const SandwichInstance & a, const SandwichInstance & b) { return a == b; })
        .def("__repr__", [](const SandwichInstance & i) {
            return "<Instance order=" + std::to_string(i.order()) + " forced=" + std::to_string(i.forced().size())
                + " optional=" + std::to_string(i.optional().size()) + ">";
        });

    m.def("check", [](int order, const std::vector<EdgeTuple> & edges, const std::string & prop) -> py::tuple {
        const auto r = check(make_graph(order, edges), property(prop));
        if (r.verdict == Verdict::unknown)
            return py::make_tuple(py::none(), py::none());
        if (r.holds())
            return py::make_tuple(true, py::none());
        return py::make_tuple(false, r.certificate.cycle.vertices);
    }, py::arg("order"), py::arg("edges"), py::arg("property"),
        "(holds, witness): witness is a hole, or a hole of the complement for antihole properties.");

    m.def("solve", [](const SandwichInstance & inst, const std::string & prop, std::uint64_t budget) {
        SolveOptions o;
        o.budget = budget;
        return solve_result(solve(inst, property(prop), o));
    }, py::arg("instance"), py::arg("property"), py::arg("budget") = default_solve_budget);

    m.def("brute_force_solve", [](const SandwichInstance & inst, const std::string & prop) {
        return solve_result(brute_force_solve(inst, property(prop)));
    });

    m.def("parse_dimacs", [](const std::string & text) {
        const auto f = parse_dimacs(text);
        return py::make_tuple(f.variables, from_formula(f));
    }, "(variables, clauses) with clauses as signed 1-based literal triples.");

    py::class_<OddReduction>(m, "OddReduction")
        .def_readonly("instance", &OddReduction::instance)
        .def_readonly("complemented", &OddReduction::complemented)
        .def("extract", &OddReduction::extract, "Truth assignment read off a completion's chosen edges.")
        .def_property_readonly("variable_gadgets", [](const OddReduction & r) {
            std::vector<std::array<Vertex, 5>> out;
            for (const auto & v : r.map.variables)
                out.push_back(v.cycle);
            return out;
        });

    py::class_<EvenReduction>(m, "EvenReduction")
        .def_readonly("instance", &EvenReduction::instance)
        .def("extract", &EvenReduction::extract, "Truth assignment read off a completion's chosen edges.")
        .def("solve", [](const EvenReduction & r, std::uint64_t budget) {
            return solve_result(solve(r.instance, PropertyId::even_hole_free, even_solve_options(r.map, budget)));
        }, py::arg("budget") = default_solve_budget, "Even-hole-free search with orientation seeds and propagation.")
        .def("completion", [](const EvenReduction & r, int variables, const std::vector<std::array<int, 3>> & clauses,
                               const std::vector<bool> & a) {
            const auto g = completion_from_assignment(to_formula(variables, clauses), a, r.map);
            return to_tuples(completion_of(r.instance, g).chosen);
        });

    m.def("reduce_odd", [](int variables, const std::vector<std::array<int, 3>> & clauses, bool c5) {
        auto [inst, map] = c5 ? build_c5_instance(to_formula(variables, clauses))
                              : build_odd_hole_free_instance(to_formula(variables, clauses));
        return OddReduction{std::move(inst), std::move(map), ! c5};
    }, py::arg("variables"), py::arg("clauses"), py::arg("c5") = false);

    m.def("reduce_even", [](int variables, const std::vector<std::array<int, 3>> & clauses) {
        auto [inst, map] = build_even_instance(to_formula(variables, clauses));
        return EvenReduction{std::move(inst), std::move(map)};
    });

    m.def("suite_names", &suite_names);
    m.def("run_suite", [](const std::string & name, std::uint64_t seed) {
        SuiteOptions o;
        o.seed = seed;
        const auto r = run_suite(name, o);
        py::dict d;
        d["name"] = r.name;
        d["passed"] = r.passed;
        d["detail"] = r.detail;
        d["seconds"] = r.seconds;
        return d;
    }, py::arg("name"), py::arg("seed") = SuiteOptions{}.seed);
}
