#pragma once

#include <sandwich/instance.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sandwich {

/// Instance text format:
///
///     sandwich <vertex-count>
///     v <id> <role-name>      one per vertex, ids ascending
///     f <u> <v>               forced edges, u < v, lexicographic
///     o <u> <v>               optional edges, u < v, lexicographic
///
/// Forbidden pairs are implicit. Blank lines and lines starting with '#'
/// are ignored on input; output is canonical, so printing a parsed file
/// reproduces it byte for byte.
std::string serialize_instance(const SandwichInstance & inst);
/// Throws ParseError on malformed or invalid input.
SandwichInstance parse_instance(const std::string & text);

/// Completion text format:
///
///     completion <edge-count>
///     e <u> <v>               chosen optional edges, lexicographic
std::string serialize_completion(const Completion & c);
Completion parse_completion(const std::string & text);

struct DotOptions {
    std::string graph_name = "sandwich";
    /// Optional edges drawn bold instead of dashed.
    std::optional<Completion> completion;
    /// Vertices coloured red, and the cycle through them drawn red.
    std::vector<Vertex> highlight_cycle;
};

/// Graphviz rendering: forced edges solid, optional edges dashed,
/// forbidden pairs omitted, role names as labels.
std::string to_dot(const SandwichInstance & inst, const DotOptions & options = {});

std::string read_file(const std::string & path);
void write_file(const std::string & path, const std::string & contents);

} // namespace sandwich
