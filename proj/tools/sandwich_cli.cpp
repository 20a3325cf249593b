// Command-line front end: reductions, solving, recognition, extraction,
// acceptance suites and DOT export.
//
// Exit status: 0 SAT/true, 1 UNSAT/false, 2 usage or parse error, 3 budget.

#include <sandwich/error.hpp>
#include <sandwich/io.hpp>
#include <sandwich/reduction_even.hpp>
#include <sandwich/reduction_odd.hpp>
#include <sandwich/solver.hpp>
#include <sandwich/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <regex>

using namespace sandwich;
using nlohmann::json;

namespace {

constexpr int exit_true = 0, exit_false = 1, exit_usage = 2, exit_budget = 3;

std::string slurp(const std::string & path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return read_file(path);
}

void emit(const std::string & path, const std::string & text)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_file(path, text);
}

json edge_json(const Edge & e) { return json::array({e.u, e.v}); }

json five_cycle_json(const FiveCycleGadget & g)
{
    return {{"cycle", g.cycle}, {"true_chord", edge_json(g.true_chord())}, {"false_chord", edge_json(g.false_chord())}};
}

json odd_map_json(const OddGadgetMap & m, bool complemented)
{
    json clauses = json::array();
    for (const auto & c : m.clauses) {
        json lits = json::array();
        for (const auto & l : c.literals)
            lits.push_back({{"literal", literal_name(l.literal)}, {"r", five_cycle_json(l.r)}, {"s", five_cycle_json(l.s)}});
        clauses.push_back({{"p", c.p}, {"l", c.l}, {"t", c.t}, {"z", c.z}, {"literals", lits}});
    }
    json vars = json::array();
    for (const auto & v : m.variables)
        vars.push_back(five_cycle_json(v));
    return {{"construction", complemented ? "odd-hole-free" : "c5-free"}, {"variables", vars}, {"clauses", clauses},
        {"connectors", m.connectors}};
}

json even_map_json(const EvenGadgetMap & m)
{
    json inc = json::array();
    for (const auto & k : m.incidences)
        inc.push_back({{"variable", k.variable + 1}, {"clause", k.clause + 1}, {"positive", k.positive},
            {"negative", k.negative}});
    return {{"construction", "even-hole-free"}, {"head", m.head}, {"foot", m.foot}, {"w1", m.w1}, {"w2", m.w2},
        {"shoulder_positive", m.shoulder_positive}, {"shoulder_negative", m.shoulder_negative}, {"incidences", inc}};
}

PropertyId property_arg(const std::string & s)
{
    auto p = parse_property(s);
    if (! p)
        throw CLI::ValidationError("--property", "unknown property '" + s + "'");
    return *p;
}

// Role tables recovered from vertex names, enough to read an assignment.
struct RecoveredOdd {
    OddGadgetMap map;
    bool complemented = false;
};

std::optional<RecoveredOdd> odd_map_from_names(const SandwichInstance & inst)
{
    static const std::regex pat(R"(X(\d+)\.([0-4]))");
    std::map<int, FiveCycleGadget> found;
    std::map<int, int> seen;
    std::smatch m;
    for (Vertex v = 0; v < inst.order(); ++v) {
        const std::string name = inst.label(v);
        if (std::regex_match(name, m, pat)) {
            const int i = std::stoi(m[1]), k = std::stoi(m[2]);
            found[i].cycle[k] = v;
            ++seen[i];
        }
    }
    if (found.empty())
        return std::nullopt;
    RecoveredOdd r;
    for (int i = 1; i <= static_cast<int>(found.size()); ++i) {
        if (! found.contains(i) || seen[i] != 5)
            throw Error("incomplete variable gadget X" + std::to_string(i));
        r.map.variables.push_back(found[i]);
    }
    // The gadget's rim is forced in the C5 instance and forbidden after
    // complementing.
    const auto & x = r.map.variables.front().cycle;
    const auto & f = inst.forced();
    r.complemented = ! std::binary_search(f.begin(), f.end(), Edge(x[0], x[1]));
    return r;
}

std::optional<EvenGadgetMap> even_map_from_names(const SandwichInstance & inst)
{
    static const std::regex shoulder(R"(S_(~?)x(\d+))");
    static const std::regex knee(R"(K_(~?)x(\d+)\^(\d+))");
    std::map<std::string, Vertex> role;
    for (Vertex v = 0; v < inst.order(); ++v)
        role[inst.label(v)] = v;
    if (! role.contains("H") || ! role.contains("F"))
        return std::nullopt;
    EvenGadgetMap m;
    m.head = role["H"];
    m.foot = role["F"];
    m.w1 = role.contains("W1") ? role["W1"] : -1;
    m.w2 = role.contains("W2") ? role["W2"] : -1;
    int variables = 0;
    std::map<std::pair<int, int>, KneePair> knees;
    std::smatch mt;
    for (const auto & [name, v] : role) {
        if (std::regex_match(name, mt, shoulder))
            variables = std::max(variables, std::stoi(mt[2]));
        else if (std::regex_match(name, mt, knee)) {
            const int var = std::stoi(mt[2]) - 1, clause = std::stoi(mt[3]) - 1;
            auto & k = knees[{clause, var}];
            k.variable = var;
            k.clause = clause;
            (mt[1].length() ? k.negative : k.positive) = v;
        }
    }
    m.shoulder_positive.assign(static_cast<std::size_t>(variables), -1);
    m.shoulder_negative.assign(static_cast<std::size_t>(variables), -1);
    for (const auto & [name, v] : role)
        if (std::regex_match(name, mt, shoulder))
            (mt[1].length() ? m.shoulder_negative : m.shoulder_positive)[std::stoi(mt[2]) - 1] = v;
    for (int i = 0; i < variables; ++i)
        if (m.shoulder_positive[i] < 0 || m.shoulder_negative[i] < 0)
            throw Error("missing shoulder of x" + std::to_string(i + 1));
    for (const auto & [key, k] : knees)
        m.incidences.push_back(k);
    return m;
}

void print_assignment(const Assignment & a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        std::cout << "x" << (i + 1) << " = " << (a[i] ? "true" : "false") << '\n';
}

void print_cycle(const std::string & what, const SandwichInstance & inst, const Cycle & c)
{
    std::cout << what;
    for (auto v : c.vertices)
        std::cout << ' ' << inst.label(v);
    std::cout << '\n';
}

Graph load_completion(const SandwichInstance & inst, const std::string & path)
{
    return inst.realize(parse_completion(slurp(path)).chosen);
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Graph sandwich problems for hole-free properties"};
    app.require_subcommand(1);
    std::string properties_help = "chordal|c5-free|odd-hole-free|even-hole-free|odd-antihole-free|berge";

    std::string input, output, map_path, completion_path, property, suite = "all";
    std::uint64_t budget = default_solve_budget, seed = SuiteOptions{}.seed;
    bool c5 = false;

    auto * reduce_odd = app.add_subcommand("reduce-odd", "DIMACS 3-CNF to an odd-hole-free sandwich instance");
    reduce_odd->add_option("cnf", input, "DIMACS file, - for stdin")->required();
    reduce_odd->add_option("-o,--output", output, "instance file (default stdout)");
    reduce_odd->add_option("--map", map_path, "write the role map as JSON");
    reduce_odd->add_flag("--c5", c5, "emit the C5-free instance before complementing");

    auto * reduce_even = app.add_subcommand("reduce-even", "DIMACS 3-CNF to an even-hole-free sandwich instance");
    reduce_even->add_option("cnf", input, "DIMACS file, - for stdin")->required();
    reduce_even->add_option("-o,--output", output, "instance file (default stdout)");
    reduce_even->add_option("--map", map_path, "write the role map as JSON");

    auto * solve_cmd = app.add_subcommand("solve", "search for a sandwich graph with a property");
    solve_cmd->add_option("instance", input, "instance file, - for stdin")->required();
    solve_cmd->add_option("--property", property, properties_help)->required();
    solve_cmd->add_option("--budget", budget, "search node budget");
    solve_cmd->add_option("-o,--output", output, "write the completion file");
    std::string cnf_path;
    solve_cmd->add_option("--orientation-seeds", cnf_path,
        "DIMACS file the instance was reduced from; seeds the even-hole-free search with one orientation split per variable");

    auto * check_cmd = app.add_subcommand("check", "recognize a property on G1, or on a completion");
    check_cmd->add_option("instance", input, "instance file")->required();
    check_cmd->add_option("completion", completion_path, "completion file (default: no optional edges)");
    check_cmd->add_option("--property", property, properties_help)->required();

    auto * complement_cmd = app.add_subcommand("complement", "swap to (complement of G2, complement of G1)");
    complement_cmd->add_option("instance", input, "instance file, - for stdin")->required();
    complement_cmd->add_option("-o,--output", output, "instance file (default stdout)");

    auto * extract_cmd = app.add_subcommand("extract", "read a truth assignment off a completion");
    extract_cmd->add_option("instance", input, "instance from reduce-odd or reduce-even")->required();
    extract_cmd->add_option("completion", completion_path, "completion file")->required();

    auto * verify_cmd = app.add_subcommand("verify", "run acceptance suites");
    verify_cmd->add_option("--suite", suite, "suite name or 'all'");
    verify_cmd->add_option("--seed", seed, "seed for randomized suites");

    auto * dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of an instance");
    dot_cmd->add_option("instance", input, "instance file, - for stdin")->required();
    dot_cmd->add_option("--completion", completion_path, "draw these optional edges bold");
    dot_cmd->add_option("-o,--output", output, "DOT file (default stdout)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (reduce_odd->parsed() || reduce_even->parsed()) {
            const auto f = parse_dimacs(slurp(input));
            SandwichInstance inst;
            json map;
            if (reduce_odd->parsed()) {
                auto [i, m] = c5 ? build_c5_instance(f) : build_odd_hole_free_instance(f);
                inst = std::move(i);
                map = odd_map_json(m, ! c5);
            }
            else {
                auto [i, m] = build_even_instance(f);
                inst = std::move(i);
                map = even_map_json(m);
            }
            emit(output, serialize_instance(inst));
            if (! map_path.empty())
                write_file(map_path, map.dump(2) + "\n");
            return exit_true;
        }

        if (solve_cmd->parsed()) {
            const auto p = property_arg(property);
            const auto inst = parse_instance(slurp(input));
            SolveOptions opts;
            if (! cnf_path.empty()) {
                if (p != PropertyId::even_hole_free)
                    throw CLI::ValidationError("--orientation-seeds", "only applies to even-hole-free");
                auto [rebuilt, m] = build_even_instance(parse_dimacs(slurp(cnf_path)));
                if (! (rebuilt == inst))
                    throw Error("instance is not reduce-even of " + cnf_path);
                opts = even_solve_options(m, budget);
            }
            opts.budget = budget;
            const auto r = solve(inst, p, opts);
            std::cout << to_string(r.verdict) << '\n';
            std::cerr << "nodes " << r.nodes;
            if (r.verdict == SolveVerdict::budget)
                std::cerr << ", frontier " << r.frontier;
            std::cerr << '\n';
            if (r.verdict == SolveVerdict::sat) {
                for (const auto & e : r.completion->chosen)
                    std::cout << "e " << e.u << ' ' << e.v << '\n';
                if (! output.empty())
                    write_file(output, serialize_completion(*r.completion));
                return exit_true;
            }
            return r.verdict == SolveVerdict::unsat ? exit_false : exit_budget;
        }

        if (check_cmd->parsed()) {
            const auto p = property_arg(property);
            const auto inst = parse_instance(slurp(input));
            const Graph g = completion_path.empty() ? inst.forced_graph() : load_completion(inst, completion_path);
            const auto r = check(g, p);
            switch (r.verdict) {
            case Verdict::holds:
                std::cout << "true\n";
                if (r.certificate.kind == Certificate::Kind::elimination_order) {
                    std::cout << "elimination order";
                    for (auto v : r.certificate.elimination_order)
                        std::cout << ' ' << inst.label(v);
                    std::cout << '\n';
                }
                return exit_true;
            case Verdict::violated:
                std::cout << "false\n";
                print_cycle(r.certificate.in_complement ? "antihole" : "hole", inst, r.certificate.cycle);
                return exit_false;
            case Verdict::unknown:
                std::cout << "unknown\n";
                return exit_budget;
            }
        }

        if (complement_cmd->parsed()) {
            emit(output, serialize_instance(complement_instance(parse_instance(slurp(input)))));
            return exit_true;
        }

        if (extract_cmd->parsed()) {
            const auto inst = parse_instance(slurp(input));
            const Graph g = load_completion(inst, completion_path);
            if (! is_sandwich_graph(inst, g))
                throw Error("completion is not a sandwich graph of the instance");
            if (auto odd = odd_map_from_names(inst)) {
                const auto a = extract_odd_assignment(odd->map, odd->complemented ? complement(g) : g);
                if (const auto * mc = std::get_if<MissingChord>(&a)) {
                    print_cycle("no chord in variable gadget x" + std::to_string(mc->variable + 1) + ":", inst, mc->witness);
                    return exit_false;
                }
                print_assignment(std::get<Assignment>(a));
                return exit_true;
            }
            if (auto even = even_map_from_names(inst)) {
                const auto a = extract_even_assignment(*even, g);
                if (const auto * err = std::get_if<OrientationError>(&a)) {
                    std::cout << (err->kind == OrientationError::Kind::mixed ? "mixed" : "missing") << " orientation of x"
                              << (err->variable + 1);
                    if (err->clause >= 0)
                        std::cout << " in clause " << (err->clause + 1);
                    std::cout << '\n';
                    if (err->witness)
                        print_cycle("hole", inst, *err->witness);
                    return exit_false;
                }
                print_assignment(std::get<Assignment>(a));
                return exit_true;
            }
            throw Error("no gadget roles found in vertex names");
        }

        if (verify_cmd->parsed()) {
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            SuiteOptions opts;
            opts.seed = seed;
            std::cout << "seed " << seed << '\n';
            bool all = true;
            for (const auto & n : names) {
                const auto r = run_suite(n, opts);
                all = all && r.passed;
                std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << " s, limit "
                          << r.time_limit_seconds << " s): " << r.detail << std::endl;
            }
            return all ? exit_true : exit_false;
        }

        if (dot_cmd->parsed()) {
            const auto inst = parse_instance(slurp(input));
            DotOptions opts;
            if (! completion_path.empty())
                opts.completion = parse_completion(slurp(completion_path));
            emit(output, to_dot(inst, opts));
            return exit_true;
        }
    }
    catch (const CLI::Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
