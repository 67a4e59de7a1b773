#include "domsat/oracle.hpp"

#include <stdexcept>

namespace domsat::oracle {

namespace {

void check_limit(const CnfFormula& formula, const OracleLimit& limit) {
    if (formula.num_vars > limit.max_vars)
        throw std::invalid_argument("oracle: formula exceeds the variable limit");
    if (formula.clauses.size() > limit.max_clauses)
        throw std::invalid_argument("oracle: formula exceeds the clause limit");
}

std::vector<bool> assignment_from_mask(int num_vars, std::uint64_t mask) {
    std::vector<bool> assignment(static_cast<std::size_t>(num_vars) + 1, false);
    for (int v = 1; v <= num_vars; ++v)
        assignment[static_cast<std::size_t>(v)] = ((mask >> (v - 1)) & 1u) != 0;
    return assignment;
}

} // namespace

bool clause_true(const std::vector<bool>& assignment, const std::vector<Lit>& clause) {
    for (Lit lit : clause) {
        const bool value = assignment[static_cast<std::size_t>(lit.var())];
        if (value != lit.is_negative())
            return true;
    }
    return false;
}

std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& formula,
                                                 const OracleLimit& limit) {
    check_limit(formula, limit);
    const std::uint64_t count = std::uint64_t{1} << formula.num_vars;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<bool> assignment = assignment_from_mask(formula.num_vars, mask);
        if (formula.satisfied_by(assignment))
            return assignment;
    }
    return std::nullopt;
}

std::vector<std::vector<bool>> enumerate_models(const CnfFormula& formula,
                                                const OracleLimit& limit) {
    check_limit(formula, limit);
    std::vector<std::vector<bool>> models;
    const std::uint64_t count = std::uint64_t{1} << formula.num_vars;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<bool> assignment = assignment_from_mask(formula.num_vars, mask);
        if (formula.satisfied_by(assignment))
            models.push_back(std::move(assignment));
    }
    return models;
}

bool brute_force_entails(const CnfFormula& formula, const std::vector<Lit>& clause,
                         const OracleLimit& limit) {
    check_limit(formula, limit);
    const std::uint64_t count = std::uint64_t{1} << formula.num_vars;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<bool> assignment = assignment_from_mask(formula.num_vars, mask);
        if (formula.satisfied_by(assignment) && !clause_true(assignment, clause))
            return false;
    }
    return true;
}

bool weakly_dominates(const MeasureVector& a, const MeasureVector& b, const MeasureSet& measures) {
    for (MeasureId m : measures) {
        switch (m) {
        case MeasureId::Size:
            if (a.size > b.size)
                return false;
            break;
        case MeasureId::Lbd:
            if (a.lbd > b.lbd)
                return false;
            break;
        case MeasureId::Cvsids:
            if (a.activity < b.activity)
                return false;
            break;
        }
    }
    return true;
}

bool strictly_dominates(const MeasureVector& a, const MeasureVector& b,
                        const MeasureSet& measures) {
    if (!weakly_dominates(a, b, measures))
        return false;
    for (MeasureId m : measures) {
        switch (m) {
        case MeasureId::Size:
            if (a.size < b.size)
                return true;
            break;
        case MeasureId::Lbd:
            if (a.lbd < b.lbd)
                return true;
            break;
        case MeasureId::Cvsids:
            if (a.activity > b.activity)
                return true;
            break;
        }
    }
    return false;
}

std::vector<bool> brute_force_undominated(const std::vector<MeasureVector>& vectors,
                                          const MeasureSet& measures) {
    std::vector<bool> flags(vectors.size(), true);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors.size(); ++j)
            if (i != j && strictly_dominates(vectors[j], vectors[i], measures)) {
                flags[i] = false;
                break;
            }
    return flags;
}

} // namespace domsat::oracle
