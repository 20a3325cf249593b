#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

namespace sandwich {

/// Variable index (0-based) with a polarity.
struct Literal {
    int var = 0;
    bool positive = true;

    Literal negated() const { return Literal{var, ! positive}; }
    bool operator==(const Literal &) const = default;
};

using Clause = std::array<Literal, 3>;
using Assignment = std::vector<bool>;

/// 3-SAT formula: every clause has exactly three distinct variables, hence
/// never a variable together with its complement.
struct CnfFormula {
    int variables = 0;
    std::vector<Clause> clauses;

    /// Every violated invariant, empty when well formed.
    std::vector<std::string> validate() const;
    /// Throws Error listing the first violation.
    void require_valid() const;

    bool satisfied_by(const Assignment & a) const;
    bool clause_satisfied(std::size_t clause, const Assignment & a) const;
    bool operator==(const CnfFormula &) const = default;
};

/// Literal text as in the role names and DIMACS: "x3" / "~x3" (1-based).
std::string literal_name(const Literal & l);

/// All 2^n assignments in binary counting order (variable 0 is the low bit).
std::vector<Assignment> all_assignments(int variables);

/// Single clause over variables 0,1,2; bit q of `pattern` set means literal
/// q is negated.
CnfFormula single_clause(unsigned pattern);

/// m clauses over n ≥ 3 variables, three distinct variables per clause,
/// uniform polarities.
CnfFormula random_formula(int variables, int clauses, std::mt19937_64 & rng);

/// DIMACS text; throws ParseError on malformed input or clauses that break
/// the 3-SAT invariants.
CnfFormula parse_dimacs(const std::string & text);
std::string to_dimacs(const CnfFormula & f);

} // namespace sandwich
