#include <sandwich/cnf.hpp>
#include <sandwich/error.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sandwich {

std::vector<std::string> CnfFormula::validate() const
{
    std::vector<std::string> errors;
    if (variables < 0)
        errors.push_back("negative variable count");
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        const auto & c = clauses[j];
        const std::string where = "clause " + std::to_string(j + 1) + ": ";
        for (const auto & l : c)
            if (l.var < 0 || l.var >= variables)
                errors.push_back(where + "variable " + std::to_string(l.var + 1) + " out of range");
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (c[a].var == c[b].var)
                    errors.push_back(where
                        + (c[a].positive == c[b].positive ? "repeated variable " : "contains a variable and its complement ")
                        + std::to_string(c[a].var + 1));
    }
    return errors;
}

void CnfFormula::require_valid() const
{
    if (auto errors = validate(); ! errors.empty())
        throw Error("malformed formula: " + errors.front());
}

bool CnfFormula::clause_satisfied(std::size_t clause, const Assignment & a) const
{
    for (const auto & l : clauses[clause])
        if (a[l.var] == l.positive)
            return true;
    return false;
}

bool CnfFormula::satisfied_by(const Assignment & a) const
{
    if (static_cast<int>(a.size()) != variables)
        return false;
    for (std::size_t j = 0; j < clauses.size(); ++j)
        if (! clause_satisfied(j, a))
            return false;
    return true;
}

std::string literal_name(const Literal & l) { return (l.positive ? "x" : "~x") + std::to_string(l.var + 1); }

std::vector<Assignment> all_assignments(int variables)
{
    std::vector<Assignment> out;
    for (unsigned long mask = 0; mask < (1UL << variables); ++mask) {
        Assignment a(static_cast<std::size_t>(variables));
        for (int i = 0; i < variables; ++i)
            a[i] = (mask >> i) & 1;
        out.push_back(std::move(a));
    }
    return out;
}

CnfFormula single_clause(unsigned pattern)
{
    CnfFormula f;
    f.variables = 3;
    Clause c;
    for (int q = 0; q < 3; ++q)
        c[q] = Literal{q, ((pattern >> q) & 1) == 0};
    f.clauses.push_back(c);
    return f;
}

CnfFormula random_formula(int variables, int clauses, std::mt19937_64 & rng)
{
    if (variables < 3)
        throw Error("random_formula needs at least 3 variables");
    CnfFormula f;
    f.variables = variables;
    std::vector<int> vars(static_cast<std::size_t>(variables));
    std::iota(vars.begin(), vars.end(), 0);
    for (int j = 0; j < clauses; ++j) {
        // Partial Fisher-Yates for three distinct variables.
        for (int q = 0; q < 3; ++q) {
            std::uniform_int_distribution<int> pick(q, variables - 1);
            std::swap(vars[q], vars[pick(rng)]);
        }
        Clause c;
        for (int q = 0; q < 3; ++q)
            c[q] = Literal{vars[q], (rng() & 1) == 0};
        f.clauses.push_back(c);
    }
    return f;
}

CnfFormula parse_dimacs(const std::string & text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int declared_clauses = 0;
    CnfFormula f;
    std::vector<int> pending;
    int pending_line = 0;

    auto finish_clause = [&](int where) {
        if (pending.size() != 3)
            throw ParseError("clause has " + std::to_string(pending.size()) + " literals, expected exactly 3", where);
        Clause c;
        for (int q = 0; q < 3; ++q) {
            const int lit = pending[q];
            if (std::abs(lit) > f.variables)
                throw ParseError("literal " + std::to_string(lit) + " exceeds declared variable count", where);
            c[q] = Literal{std::abs(lit) - 1, lit > 0};
        }
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (c[a].var == c[b].var)
                    throw ParseError(c[a].positive == c[b].positive
                            ? "clause repeats a variable"
                            : "clause contains a variable and its complement",
                        where);
        f.clauses.push_back(c);
        pending.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (! (ls >> first) || first[0] == 'c')
            continue;
        if (first == "%")
            break;
        if (first == "p") {
            std::string kind;
            if (have_header)
                throw ParseError("second problem line", line_no);
            if (! (ls >> kind >> f.variables >> declared_clauses) || kind != "cnf" || f.variables < 0
                || declared_clauses < 0)
                throw ParseError("malformed problem line, expected 'p cnf <vars> <clauses>'", line_no);
            have_header = true;
            continue;
        }
        if (! have_header)
            throw ParseError("clause before the 'p cnf' header", line_no);
        ls.clear();
        ls.seekg(0);
        std::string token;
        while (ls >> token) {
            std::size_t used = 0;
            int lit = 0;
            try {
                lit = std::stoi(token, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != token.size())
                throw ParseError("unexpected token '" + token + "'", line_no);
            if (pending.empty())
                pending_line = line_no;
            if (lit == 0)
                finish_clause(pending_line);
            else
                pending.push_back(lit);
        }
    }
    if (! have_header)
        throw ParseError("missing 'p cnf' header", 0);
    if (! pending.empty())
        throw ParseError("last clause is not terminated by 0", pending_line);
    if (static_cast<int>(f.clauses.size()) != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found "
                + std::to_string(f.clauses.size()),
            0);
    return f;
}

std::string to_dimacs(const CnfFormula & f)
{
    std::ostringstream out;
    out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
    for (const auto & c : f.clauses) {
        for (const auto & l : c)
            out << (l.positive ? l.var + 1 : -(l.var + 1)) << ' ';
        out << "0\n";
    }
    return out.str();
}

} // namespace sandwich
