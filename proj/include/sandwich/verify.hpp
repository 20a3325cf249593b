#pragma once

#include <sandwich/instance.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sandwich {

/// Outcome of one acceptance suite.
struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double time_limit_seconds = 0.0;
};

struct SuiteOptions {
    std::uint64_t seed = 20240917;
};

/// Names accepted by run_suite, in criterion order.
const std::vector<std::string> & suite_names();

/// Throws Error for an unknown name.
SuiteResult run_suite(const std::string & name, const SuiteOptions & options = {});

/// Random well-formed instance on `order` vertices with at most
/// `max_optional` optional edges; the rest of the pairs split between
/// forced and forbidden.
SandwichInstance random_instance(int order, std::size_t max_optional, std::mt19937_64 & rng);

/// Lengths of all induced cycles (length >= 3) of a graph on at most 16
/// vertices, by testing every vertex subset for being connected and
/// 2-regular.
std::vector<int> induced_cycle_lengths_by_subsets(const Graph & g);

} // namespace sandwich
