#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "domsat/cnf.hpp"

namespace domsat {

/// Why a DIMACS parse failed.
enum class ParseErrorKind {
    BadHeader,     ///< missing or malformed "p cnf V C" line
    BadToken,      ///< a token that is not a signed integer where one was expected
    VarOutOfRange, ///< literal references a variable beyond the declared count
    Truncated      ///< input ended inside a clause (no terminating 0)
};

struct ParseError {
    int line = 0;
    int column = 0;
    ParseErrorKind kind = ParseErrorKind::BadToken;
    std::string message;
};

/// Result of parsing: exactly one of formula/error is engaged. A clause count
/// that disagrees with the header is tolerated and reported as a warning.
struct DimacsParseResult {
    std::optional<CnfFormula> formula;
    std::optional<ParseError> error;
    bool clause_count_mismatch = false;

    bool ok() const { return formula.has_value(); }
};

/**
 * Parses a DIMACS CNF document. Comment lines start with 'c'; the header
 * "p cnf <vars> <clauses>" must precede all clauses; clauses are
 * whitespace-separated signed integers terminated by 0.
 *
 * Tautological clauses are dropped and duplicate literals removed, so the
 * returned formula always satisfies the CnfFormula invariants. An empty
 * clause ("0") is legal and makes the formula trivially unsatisfiable.
 */
DimacsParseResult parse_dimacs(std::string_view text);

/// Reads the whole file and parses it. A missing/unreadable file yields a
/// BadHeader error at line 0 with an explanatory message.
DimacsParseResult parse_dimacs_file(const std::string& path);

/// Serializes in the same conventions parse_dimacs() accepts; parse(write(f))
/// reproduces f exactly.
std::string write_dimacs(const CnfFormula& formula);
void write_dimacs(std::ostream& out, const CnfFormula& formula);

} // namespace domsat
