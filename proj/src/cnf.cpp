#include "domsat/cnf.hpp"

#include <algorithm>
#include <stdexcept>

namespace domsat {

std::optional<std::vector<Lit>> CnfFormula::normalize_clause(std::vector<Lit> lits) {
    std::vector<Lit> out;
    out.reserve(lits.size());
    for (Lit l : lits) {
        bool duplicate = false;
        for (Lit k : out) {
            if (k == l) {
                duplicate = true;
                break;
            }
            if (k == ~l)
                return std::nullopt; // tautology
        }
        if (!duplicate)
            out.push_back(l);
    }
    return out;
}

void CnfFormula::add_clause(const std::vector<int>& dimacs_lits) {
    std::vector<Lit> lits;
    lits.reserve(dimacs_lits.size());
    for (int v : dimacs_lits) {
        if (v == 0)
            throw std::invalid_argument("0 is not a literal");
        Lit l = Lit::from_dimacs(v);
        if (l.var() > num_vars)
            throw std::out_of_range("literal variable exceeds num_vars");
        lits.push_back(l);
    }
    if (auto normalized = normalize_clause(std::move(lits)))
        clauses.push_back(std::move(*normalized));
}

CnfFormula CnfFormula::from_clauses(int num_vars,
                                    std::initializer_list<std::vector<int>> cls) {
    CnfFormula f;
    f.num_vars = num_vars;
    for (const auto& c : cls)
        f.add_clause(c);
    return f;
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
    for (const auto& clause : clauses) {
        bool sat = false;
        for (Lit l : clause) {
            const bool value = assignment[static_cast<std::size_t>(l.var())];
            if (value != l.is_negative()) {
                sat = true;
                break;
            }
        }
        if (!sat)
            return false;
    }
    return true;
}

} // namespace domsat
