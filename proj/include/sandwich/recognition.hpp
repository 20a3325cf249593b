#pragma once

#include <sandwich/cycles.hpp>
#include <sandwich/graph.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sandwich {

enum class PropertyId { chordal, c5_free, odd_hole_free, even_hole_free, odd_antihole_free, berge };

inline constexpr PropertyId all_properties[] = {PropertyId::chordal, PropertyId::c5_free, PropertyId::odd_hole_free,
    PropertyId::even_hole_free, PropertyId::odd_antihole_free, PropertyId::berge};

/// Command-line spelling: "chordal", "c5-free", ...
std::string_view to_string(PropertyId p);
std::optional<PropertyId> parse_property(std::string_view name);

enum class Verdict { holds, violated, unknown };

/// What a recognition verdict rests on.
///
/// A violation is a chordless cycle either in the graph itself (hole, C5)
/// or in its complement (`in_complement`, an antihole of the graph). An
/// affirming chordal certificate is a perfect elimination order.
struct Certificate {
    enum class Kind { none, violation, elimination_order };

    Kind kind = Kind::none;
    Cycle cycle;
    bool in_complement = false;
    std::vector<Vertex> elimination_order;

    static Certificate violation(Cycle c, bool in_complement = false)
    {
        Certificate cert;
        cert.kind = Kind::violation;
        cert.cycle = std::move(c);
        cert.in_complement = in_complement;
        return cert;
    }
};

struct CheckResult {
    Verdict verdict = Verdict::unknown;
    Certificate certificate;

    bool holds() const noexcept { return verdict == Verdict::holds; }
};

inline constexpr std::uint64_t default_check_budget = 10'000'000;

/// Maximum cardinality search order, reversed: a perfect elimination order
/// whenever g is chordal.
std::vector<Vertex> mcs_elimination_order(const Graph & g);

/// Every vertex's later neighbourhood in `order` is a clique.
bool is_perfect_elimination_order(const Graph & g, const std::vector<Vertex> & order);

/// Exact, never unknown. On failure the certificate is a hole.
CheckResult is_chordal(const Graph & g);

/// Decide `p` for g. Verdict::unknown only when the enumeration budget runs out.
CheckResult check(const Graph & g, PropertyId p, std::uint64_t budget = default_check_budget);

/// Induced C5 by scanning 5-subsets with an anchored enumeration.
std::optional<Cycle> find_c5_by_subsets(const Graph & g);

/// The violation certificate really is a structure forbidden by `p` in g.
bool certificate_verifies(const Graph & g, PropertyId p, const Certificate & cert);

} // namespace sandwich
