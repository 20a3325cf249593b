#pragma once

#include <sandwich/vertex_set.hpp>

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sandwich {

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge &) const = default;
};

/// Finite simple graph on dense vertex ids 0..order()-1, with an optional
/// human-readable name per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    bool adjacent(Vertex a, Vertex b) const { return adjacency_[a].contains(b); }
    const VertexSet & neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return adjacency_[v].size(); }

    /// Throws Error on self-loops or out-of-range ids. Adding an existing
    /// edge is a no-op.
    void add_edge(Vertex a, Vertex b);
    void remove_edge(Vertex a, Vertex b);

    /// Edges in lexicographic order.
    std::vector<Edge> edges() const;

    /// Name if set, otherwise the decimal id.
    std::string label(Vertex v) const;
    void set_name(Vertex v, std::string name);
    const std::vector<std::string> & names() const noexcept { return names_; }

    VertexSet all_vertices() const { return VertexSet::full(order()); }

    bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < order(); }

    /// Same order and same adjacency; names are ignored.
    bool same_edges(const Graph & other) const { return adjacency_ == other.adjacency_; }

private:
    std::vector<VertexSet> adjacency_;
    std::vector<std::string> names_;
    std::size_t edge_count_ = 0;
};

Graph complement(const Graph & g);

/// Subgraph induced by `subset`, renumbered 0..|subset|-1 in the given order.
/// Names carry over. Throws Error on an unknown or repeated vertex.
Graph induced(const Graph & g, std::span<const Vertex> subset);

/// Every 3-clique, each as an ascending triple, in lexicographic order.
std::vector<std::array<Vertex, 3>> triangles(const Graph & g);

/// Largest pattern accepted by contains_subgraph.
inline constexpr int max_pattern_order = 8;

/// Injective map from pattern vertices to g vertices carrying every pattern
/// edge onto a g edge (and, when `induced_copy`, every pattern non-edge onto
/// a g non-edge). Result is indexed by pattern vertex.
std::optional<std::vector<Vertex>> find_subgraph(const Graph & g, const Graph & pattern, bool induced_copy);

/// Non-induced containment. Throws Error if the pattern exceeds max_pattern_order.
bool contains_subgraph(const Graph & g, const Graph & pattern);

/// Induced containment, same size limit.
bool contains_induced_subgraph(const Graph & g, const Graph & pattern);

// Small named graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();
Graph disjoint_union(const Graph & a, const Graph & b);

} // namespace sandwich
