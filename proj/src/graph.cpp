#include <sandwich/error.hpp>
#include <sandwich/graph.hpp>

#include <algorithm>
#include <functional>

namespace sandwich {

Graph::Graph(int order) : adjacency_(static_cast<std::size_t>(order), VertexSet(order)), names_(static_cast<std::size_t>(order)) {}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order)
{
    for (const auto & e : edges)
        add_edge(e.u, e.v);
}

void Graph::add_edge(Vertex a, Vertex b)
{
    if (! valid_vertex(a) || ! valid_vertex(b))
        throw Error("edge " + std::to_string(a) + "-" + std::to_string(b) + " has an unknown endpoint");
    if (a == b)
        throw Error("self-loop at vertex " + std::to_string(a));
    if (adjacency_[a].contains(b))
        return;
    adjacency_[a].insert(b);
    adjacency_[b].insert(a);
    ++edge_count_;
}

void Graph::remove_edge(Vertex a, Vertex b)
{
    if (! adjacency_[a].contains(b))
        return;
    adjacency_[a].erase(b);
    adjacency_[b].erase(a);
    --edge_count_;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v = adjacency_[u].next(u + 1); v != -1; v = adjacency_[u].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

std::string Graph::label(Vertex v) const
{
    if (names_[v].empty())
        return std::to_string(v);
    return names_[v];
}

void Graph::set_name(Vertex v, std::string name) { names_[v] = std::move(name); }

Graph complement(const Graph & g)
{
    Graph c(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        c.set_name(u, g.names()[u]);
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (! g.adjacent(u, v))
                c.add_edge(u, v);
    }
    return c;
}

Graph induced(const Graph & g, std::span<const Vertex> subset)
{
    VertexSet seen(g.order());
    for (auto v : subset) {
        if (! g.valid_vertex(v))
            throw Error("induced: unknown vertex " + std::to_string(v));
        if (seen.contains(v))
            throw Error("induced: vertex " + std::to_string(v) + " listed twice");
        seen.insert(v);
    }
    Graph h(static_cast<int>(subset.size()));
    for (std::size_t i = 0; i < subset.size(); ++i) {
        h.set_name(static_cast<Vertex>(i), g.names()[subset[i]]);
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (g.adjacent(subset[i], subset[j]))
                h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return h;
}

std::vector<std::array<Vertex, 3>> triangles(const Graph & g)
{
    std::vector<std::array<Vertex, 3>> out;
    for (Vertex a = 0; a < g.order(); ++a) {
        const auto & na = g.neighbors(a);
        for (Vertex b = na.next(a + 1); b != -1; b = na.next(b + 1)) {
            auto common = na & g.neighbors(b);
            for (Vertex c = common.next(b + 1); c != -1; c = common.next(c + 1))
                out.push_back({a, b, c});
        }
    }
    return out;
}

namespace {
    // Pattern vertices in an order where each one (after the first of its
    // component) has an already-placed neighbour, highest degree first.
    std::vector<Vertex> placement_order(const Graph & p)
    {
        std::vector<Vertex> order;
        std::vector<bool> placed(static_cast<std::size_t>(p.order()), false);
        while (static_cast<int>(order.size()) < p.order()) {
            Vertex best = -1;
            int best_links = -1, best_degree = -1;
            for (Vertex v = 0; v < p.order(); ++v) {
                if (placed[v])
                    continue;
                int links = 0;
                for (auto u : order)
                    links += p.adjacent(u, v);
                if (links > best_links || (links == best_links && p.degree(v) > best_degree)) {
                    best = v;
                    best_links = links;
                    best_degree = p.degree(v);
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
        return order;
    }
} // namespace

std::optional<std::vector<Vertex>> find_subgraph(const Graph & g, const Graph & pattern, bool induced_copy)
{
    const int k = pattern.order();
    if (k == 0)
        return std::vector<Vertex>{};
    if (k > g.order())
        return std::nullopt;

    const auto order = placement_order(pattern);
    std::vector<Vertex> image(static_cast<std::size_t>(k), -1);
    VertexSet used(g.order());

    std::function<bool(int)> place = [&](int depth) -> bool {
        if (depth == k)
            return true;
        const Vertex pv = order[depth];
        VertexSet candidates = VertexSet::full(g.order()) - used;
        for (int d = 0; d < depth; ++d) {
            const Vertex prev = order[d];
            if (pattern.adjacent(pv, prev))
                candidates &= g.neighbors(image[prev]);
            else if (induced_copy)
                candidates -= g.neighbors(image[prev]);
        }
        if (! induced_copy) {
            const int need = pattern.degree(pv);
            for (Vertex c = candidates.first(); c != -1; c = candidates.next(c + 1))
                if (g.degree(c) < need)
                    candidates.erase(c);
        }
        for (Vertex c = candidates.first(); c != -1; c = candidates.next(c + 1)) {
            image[pv] = c;
            used.insert(c);
            if (place(depth + 1))
                return true;
            used.erase(c);
        }
        image[pv] = -1;
        return false;
    };

    if (place(0))
        return image;
    return std::nullopt;
}

bool contains_subgraph(const Graph & g, const Graph & pattern)
{
    if (pattern.order() > max_pattern_order)
        throw Error("pattern too large: " + std::to_string(pattern.order()) + " vertices");
    return find_subgraph(g, pattern, false).has_value();
}

bool contains_induced_subgraph(const Graph & g, const Graph & pattern)
{
    if (pattern.order() > max_pattern_order)
        throw Error("pattern too large: " + std::to_string(pattern.order()) + " vertices");
    return find_subgraph(g, pattern, true).has_value();
}

Graph path_graph(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw Error("cycle_graph needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph petersen_graph()
{
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);     // outer
        g.add_edge(i, i + 5);           // spoke
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return g;
}

Graph disjoint_union(const Graph & a, const Graph & b)
{
    Graph g(a.order() + b.order());
    for (const auto & e : a.edges())
        g.add_edge(e.u, e.v);
    for (const auto & e : b.edges())
        g.add_edge(a.order() + e.u, a.order() + e.v);
    return g;
}

} // namespace sandwich
