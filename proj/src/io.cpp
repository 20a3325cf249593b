#include <sandwich/error.hpp>
#include <sandwich/io.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace sandwich {

namespace {
    int to_int(const std::string & token, int line)
    {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != token.size() || token.empty())
            throw ParseError("expected an integer, got '" + token + "'", line);
        return value;
    }

    std::vector<std::string> tokens(const std::string & line)
    {
        std::istringstream ls(line);
        std::vector<std::string> out;
        std::string t;
        while (ls >> t)
            out.push_back(t);
        return out;
    }

    bool skippable(const std::vector<std::string> & t) { return t.empty() || t[0][0] == '#'; }

    void write_edge(std::ostringstream & out, char tag, const Edge & e) { out << tag << ' ' << e.u << ' ' << e.v << '\n'; }
} // namespace

std::string serialize_instance(const SandwichInstance & inst)
{
    std::ostringstream out;
    out << "sandwich " << inst.order() << '\n';
    for (Vertex v = 0; v < inst.order(); ++v)
        out << "v " << v << ' ' << inst.label(v) << '\n';
    for (const auto & e : inst.forced())
        write_edge(out, 'f', e);
    for (const auto & e : inst.optional())
        write_edge(out, 'o', e);
    return out.str();
}

SandwichInstance parse_instance(const std::string & text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int order = -1;
    std::vector<std::string> names;
    std::vector<bool> named;
    std::vector<Edge> forced, optional;
    while (std::getline(in, line)) {
        ++line_no;
        const auto t = tokens(line);
        if (skippable(t))
            continue;
        if (order < 0) {
            if (t.size() != 2 || t[0] != "sandwich")
                throw ParseError("expected header 'sandwich <vertex-count>'", line_no);
            order = to_int(t[1], line_no);
            if (order < 0)
                throw ParseError("negative vertex count", line_no);
            names.assign(static_cast<std::size_t>(order), "");
            named.assign(static_cast<std::size_t>(order), false);
            continue;
        }
        if (t[0] == "v") {
            if (t.size() != 3)
                throw ParseError("expected 'v <id> <role-name>'", line_no);
            const int id = to_int(t[1], line_no);
            if (id < 0 || id >= order)
                throw ParseError("vertex id " + t[1] + " out of range", line_no);
            if (named[id])
                throw ParseError("vertex " + t[1] + " declared twice", line_no);
            named[id] = true;
            names[id] = t[2];
        }
        else if (t[0] == "f" || t[0] == "o") {
            if (t.size() != 3)
                throw ParseError("expected '" + t[0] + " <u> <v>'", line_no);
            const int a = to_int(t[1], line_no), b = to_int(t[2], line_no);
            if (a < 0 || a >= order || b < 0 || b >= order)
                throw ParseError("edge endpoint outside the vertex set", line_no);
            if (a == b)
                throw ParseError("self-loop", line_no);
            (t[0] == "f" ? forced : optional).emplace_back(a, b);
        }
        else
            throw ParseError("unknown record '" + t[0] + "'", line_no);
    }
    if (order < 0)
        throw ParseError("missing 'sandwich' header", 0);
    SandwichInstance inst(order, std::move(forced), std::move(optional), std::move(names));
    if (auto errors = inst.validate(); ! errors.empty())
        throw ParseError(errors.front(), 0);
    return inst;
}

std::string serialize_completion(const Completion & c)
{
    auto chosen = c.chosen;
    std::sort(chosen.begin(), chosen.end());
    std::ostringstream out;
    out << "completion " << chosen.size() << '\n';
    for (const auto & e : chosen)
        write_edge(out, 'e', e);
    return out.str();
}

Completion parse_completion(const std::string & text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int expected = -1;
    Completion c;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++line_no;
        const auto t = tokens(line);
        if (skippable(t))
            continue;
        if (expected < 0) {
            if (t.size() != 2 || t[0] != "completion")
                throw ParseError("expected header 'completion <edge-count>'", line_no);
            expected = to_int(t[1], line_no);
            continue;
        }
        if (t.size() != 3 || t[0] != "e")
            throw ParseError("expected 'e <u> <v>'", line_no);
        const int a = to_int(t[1], line_no), b = to_int(t[2], line_no);
        if (a == b || a < 0 || b < 0)
            throw ParseError("invalid edge", line_no);
        if (! seen.insert(Edge(a, b)).second)
            throw ParseError("duplicate edge", line_no);
        c.chosen.emplace_back(a, b);
    }
    if (expected < 0)
        throw ParseError("missing 'completion' header", 0);
    if (static_cast<int>(c.chosen.size()) != expected)
        throw ParseError("header declares " + std::to_string(expected) + " edges, found " + std::to_string(c.chosen.size()), 0);
    std::sort(c.chosen.begin(), c.chosen.end());
    return c;
}

std::string to_dot(const SandwichInstance & inst, const DotOptions & options)
{
    std::set<Edge> chosen;
    if (options.completion)
        chosen.insert(options.completion->chosen.begin(), options.completion->chosen.end());
    std::set<Vertex> marked(options.highlight_cycle.begin(), options.highlight_cycle.end());
    std::set<Edge> cycle_edges;
    const auto & hc = options.highlight_cycle;
    if (hc.size() >= 3)
        for (std::size_t i = 0; i < hc.size(); ++i)
            cycle_edges.insert(Edge(hc[i], hc[(i + 1) % hc.size()]));

    auto quoted = [](const std::string & s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"' || ch == '\\')
                out += '\\';
            out += ch;
        }
        return out + "\"";
    };

    std::ostringstream out;
    out << "graph " << quoted(options.graph_name) << " {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (Vertex v = 0; v < inst.order(); ++v) {
        out << "  " << v << " [label=" << quoted(inst.label(v));
        if (marked.contains(v))
            out << ", color=red, fontcolor=red";
        out << "];\n";
    }
    auto edge = [&](const Edge & e, const std::string & style) {
        out << "  " << e.u << " -- " << e.v << " [style=" << style;
        if (cycle_edges.contains(e))
            out << ", color=red, penwidth=2";
        out << "];\n";
    };
    for (const auto & e : inst.forced())
        edge(e, "solid");
    for (const auto & e : inst.optional())
        edge(e, chosen.contains(e) ? "bold" : "dashed");
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string & path, const std::string & contents)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw Error("cannot write " + path);
    out << contents;
}

} // namespace sandwich
