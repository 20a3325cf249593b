#include <sandwich/error.hpp>
#include <sandwich/instance.hpp>

#include <algorithm>
#include <set>

namespace sandwich {

namespace {
    std::string pair_text(const Edge & e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }
} // namespace

SandwichInstance::SandwichInstance(
    int order, std::vector<Edge> forced, std::vector<Edge> optional, std::vector<std::string> names) :
    order_(order), forced_(std::move(forced)), optional_(std::move(optional)), names_(std::move(names))
{
    names_.resize(static_cast<std::size_t>(std::max(order_, 0)));
    std::sort(forced_.begin(), forced_.end());
    std::sort(optional_.begin(), optional_.end());
}

std::string SandwichInstance::label(Vertex v) const
{
    if (v >= 0 && v < order_ && ! names_[v].empty())
        return names_[v];
    return std::to_string(v);
}

std::vector<std::string> SandwichInstance::validate() const
{
    std::vector<std::string> errors;
    if (order_ < 0)
        errors.push_back("negative vertex count");
    std::set<Edge> forced_seen, optional_seen;
    auto scan = [&](const std::vector<Edge> & edges, std::set<Edge> & seen, const char * cls) {
        for (const auto & e : edges) {
            if (e.u < 0 || e.v >= order_) {
                errors.push_back(std::string(cls) + " edge " + pair_text(e) + " has an endpoint outside the vertex set");
                continue;
            }
            if (e.u == e.v) {
                errors.push_back(std::string(cls) + " self-loop at " + std::to_string(e.u));
                continue;
            }
            if (! seen.insert(e).second)
                errors.push_back(std::string("duplicate ") + cls + " edge " + pair_text(e));
        }
    };
    scan(forced_, forced_seen, "forced");
    scan(optional_, optional_seen, "optional");
    for (const auto & e : optional_seen)
        if (forced_seen.contains(e))
            errors.push_back("edge in both classes: " + pair_text(e));
    return errors;
}

std::vector<Edge> SandwichInstance::forbidden() const
{
    Graph g2 = upper_graph();
    std::vector<Edge> out;
    for (Vertex u = 0; u < order_; ++u)
        for (Vertex v = u + 1; v < order_; ++v)
            if (! g2.adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

Graph SandwichInstance::forced_graph() const
{
    Graph g(order_, forced_);
    for (Vertex v = 0; v < order_; ++v)
        g.set_name(v, names_[v]);
    return g;
}

Graph SandwichInstance::upper_graph() const
{
    Graph g = forced_graph();
    for (const auto & e : optional_)
        g.add_edge(e.u, e.v);
    return g;
}

Graph SandwichInstance::realize(const std::vector<Edge> & chosen) const
{
    Graph g = forced_graph();
    for (const auto & e : chosen) {
        if (! std::binary_search(optional_.begin(), optional_.end(), e))
            throw Error("edge " + pair_text(e) + " is not optional in this instance");
        g.add_edge(e.u, e.v);
    }
    return g;
}

Vertex InstanceBuilder::add_vertex(std::string name)
{
    names_.push_back(std::move(name));
    return static_cast<Vertex>(names_.size() - 1);
}

SandwichInstance InstanceBuilder::build() const
{
    auto unique = [](std::vector<Edge> edges) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return edges;
    };
    SandwichInstance inst(order(), unique(forced_), unique(optional_), names_);
    if (auto errors = inst.validate(); ! errors.empty())
        throw Error("instance construction: " + errors.front());
    return inst;
}

SandwichInstance complement_instance(const SandwichInstance & inst)
{
    return SandwichInstance(inst.order(), inst.forbidden(), inst.optional(), inst.names());
}

bool is_sandwich_graph(const SandwichInstance & inst, const Graph & g)
{
    if (g.order() != inst.order())
        throw Error("vertex-set mismatch: graph has " + std::to_string(g.order()) + " vertices, instance has "
            + std::to_string(inst.order()));
    for (const auto & e : inst.forced())
        if (! g.adjacent(e.u, e.v))
            return false;
    std::size_t optional_present = 0;
    for (const auto & e : inst.optional())
        optional_present += g.adjacent(e.u, e.v);
    return g.size() == inst.forced().size() + optional_present;
}

Completion completion_of(const SandwichInstance & inst, const Graph & g)
{
    Completion c;
    for (const auto & e : inst.optional())
        if (g.adjacent(e.u, e.v))
            c.chosen.push_back(e);
    return c;
}

} // namespace sandwich
