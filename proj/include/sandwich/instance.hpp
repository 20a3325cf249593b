#pragma once

#include <sandwich/graph.hpp>

#include <string>
#include <vector>

namespace sandwich {

/// Pair (G1, G2) on one vertex set, stored as forced edges E1 and optional
/// edges E2 \ E1. Forbidden pairs are everything else and are never stored.
///
/// The constructor does not police its input; call validate() on anything
/// that came from outside the library.
class SandwichInstance {
public:
    SandwichInstance() = default;
    SandwichInstance(int order, std::vector<Edge> forced, std::vector<Edge> optional,
        std::vector<std::string> names = {});

    int order() const noexcept { return order_; }
    const std::vector<Edge> & forced() const noexcept { return forced_; }
    const std::vector<Edge> & optional() const noexcept { return optional_; }
    const std::vector<std::string> & names() const noexcept { return names_; }
    std::string label(Vertex v) const;

    /// Every violated invariant, empty when the instance is well formed.
    std::vector<std::string> validate() const;
    bool valid() const { return validate().empty(); }

    /// Pairs in neither class, in lexicographic order.
    std::vector<Edge> forbidden() const;

    Graph forced_graph() const;   ///< G1
    Graph upper_graph() const;    ///< G2
    /// Forced edges plus `chosen`. Throws Error if a chosen edge is not optional.
    Graph realize(const std::vector<Edge> & chosen) const;

    bool operator==(const SandwichInstance &) const = default;

private:
    int order_ = 0;
    std::vector<Edge> forced_;
    std::vector<Edge> optional_;
    std::vector<std::string> names_;
};

/// Chosen optional edges; the realised graph is forced ∪ chosen.
struct Completion {
    std::vector<Edge> chosen;
};

/// Incremental construction of an instance with named vertices.
class InstanceBuilder {
public:
    Vertex add_vertex(std::string name);
    void forced(Vertex a, Vertex b) { forced_.emplace_back(a, b); }
    void optional(Vertex a, Vertex b) { optional_.emplace_back(a, b); }
    int order() const noexcept { return static_cast<int>(names_.size()); }
    /// Drops repeated edges, then validates; throws Error if invalid.
    SandwichInstance build() const;

private:
    std::vector<std::string> names_;
    std::vector<Edge> forced_;
    std::vector<Edge> optional_;
};

/// Swap roles so the result is (G2^c, G1^c): forbidden becomes forced,
/// forced becomes forbidden, optional stays optional.
SandwichInstance complement_instance(const SandwichInstance & inst);

/// forced ⊆ E(g) ⊆ forced ∪ optional. Throws Error on an order mismatch.
bool is_sandwich_graph(const SandwichInstance & inst, const Graph & g);

/// Optional edges present in g.
Completion completion_of(const SandwichInstance & inst, const Graph & g);

} // namespace sandwich
