#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "domsat/literal.hpp"

namespace domsat {

/**
 * A propositional formula in conjunctive normal form.
 *
 * Clauses are kept normalized: no duplicate literals within a clause and no
 * tautological clauses (a clause containing both l and ~l is dropped on
 * insertion). Every literal's variable must lie in [1, num_vars].
 */
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<Lit>> clauses;

    /// Deduplicates literals (keeping first occurrences) and detects
    /// tautologies. Returns std::nullopt for a tautological clause.
    static std::optional<std::vector<Lit>> normalize_clause(std::vector<Lit> lits);

    /// Adds a clause given in DIMACS integer form, applying normalization.
    /// Throws std::out_of_range if a literal's variable exceeds num_vars.
    void add_clause(const std::vector<int>& dimacs_lits);

    /// Convenience builder for programmatic construction (tests, generators).
    static CnfFormula from_clauses(int num_vars,
                                   std::initializer_list<std::vector<int>> clauses);

    /// True iff the assignment (indexed 1..num_vars, true = positive) satisfies
    /// every clause.
    bool satisfied_by(const std::vector<bool>& assignment) const;

    bool operator==(const CnfFormula&) const = default;
};

} // namespace domsat
