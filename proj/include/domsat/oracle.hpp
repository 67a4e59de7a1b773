#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "domsat/cnf.hpp"
#include "domsat/measures.hpp"

/**
 * Brute-force reference implementations used to validate the solver and the
 * dominance machinery. Everything here is deliberately naive — exhaustive
 * enumeration and direct raw-value comparisons, sharing no logic with the
 * optimized code paths it checks.
 */
namespace domsat::oracle {

/// Enumeration guard; exceeding it throws instead of looping for hours.
struct OracleLimit {
    int max_vars = 25;
    std::size_t max_clauses = 4096;
};

/// True iff the clause holds under the assignment (indexed by variable,
/// entry v true = variable v assigned true).
bool clause_true(const std::vector<bool>& assignment, const std::vector<Lit>& clause);

/// Exhaustive satisfiability: a model if one exists, nullopt otherwise.
std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& formula,
                                                 const OracleLimit& limit = {});

/// All models, in ascending assignment order. Each has num_vars + 1 entries
/// with index 0 unused.
std::vector<std::vector<bool>> enumerate_models(const CnfFormula& formula,
                                                const OracleLimit& limit = {});

/// Semantic entailment: every model of the formula satisfies the clause.
bool brute_force_entails(const CnfFormula& formula, const std::vector<Lit>& clause,
                         const OracleLimit& limit = {});

/// Dominance on raw measure values, re-derived from first principles:
/// size and lbd count against a clause, activity counts for it.
bool weakly_dominates(const MeasureVector& a, const MeasureVector& b, const MeasureSet& measures);
bool strictly_dominates(const MeasureVector& a, const MeasureVector& b, const MeasureSet& measures);

/// Flags the vectors no other vector in the set strictly dominates.
std::vector<bool> brute_force_undominated(const std::vector<MeasureVector>& vectors,
                                          const MeasureSet& measures);

} // namespace domsat::oracle
