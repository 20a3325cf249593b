#pragma once

#include <sandwich/graph.hpp>

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace sandwich {

/// Cyclically ordered vertex list. Built through make_cycle, which stores
/// the canonical form: smallest vertex first, then the direction whose
/// second vertex is smaller.
struct Cycle {
    std::vector<Vertex> vertices;

    int length() const noexcept { return static_cast<int>(vertices.size()); }
    bool operator==(const Cycle &) const = default;
    auto operator<=>(const Cycle &) const = default;
};

Cycle make_cycle(std::vector<Vertex> vertices);

/// Consecutive vertices adjacent, no other pair adjacent, length >= 3,
/// vertices distinct and in range.
bool is_chordless_cycle(const Graph & g, const std::vector<Vertex> & cyclic_order);

enum class Parity { any, odd, even };

struct CycleQuery {
    int min_length = 3;
    int max_length = std::numeric_limits<int>::max();
    Parity parity = Parity::any;
    /// Extension steps before giving up.
    std::uint64_t budget = 10'000'000;
};

enum class SearchStatus { complete, stopped, exhausted };

struct CycleSearchOutcome {
    SearchStatus status = SearchStatus::complete;
    std::uint64_t steps = 0;
};

/// Calls `visit` once per chordless cycle matching the query (canonical
/// form, each cycle once up to rotation and reflection). Returning false
/// from `visit` stops the search.
CycleSearchOutcome for_each_chordless_cycle(
    const Graph & g, const CycleQuery & query, const std::function<bool(const Cycle &)> & visit);

struct CycleEnumeration {
    std::vector<Cycle> cycles;
    /// True when the budget ran out; `cycles` then holds what was found.
    bool exhausted = false;
    std::uint64_t steps = 0;
};

CycleEnumeration chordless_cycles(const Graph & g, int min_length, std::uint64_t budget = 10'000'000);

/// First chordless cycle matching the query, if any.
struct CycleProbe {
    std::optional<Cycle> cycle;
    bool exhausted = false;
};

CycleProbe find_chordless_cycle(const Graph & g, const CycleQuery & query);

} // namespace sandwich
