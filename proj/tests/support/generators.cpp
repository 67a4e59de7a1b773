#include "support/generators.hpp"

#include <algorithm>
#include <cassert>

namespace domsat::testsupport {

namespace {

std::vector<int> distinct_vars(Rng& rng, int num_vars, int width) {
    assert(width <= num_vars);
    std::uniform_int_distribution<int> pick(1, num_vars);
    std::vector<int> vars;
    while (static_cast<int>(vars.size()) < width) {
        const int v = pick(rng);
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            vars.push_back(v);
    }
    return vars;
}

std::vector<int> random_clause(Rng& rng, int num_vars, int width) {
    std::vector<int> clause = distinct_vars(rng, num_vars, width);
    for (int& v : clause)
        if (rng() & 1)
            v = -v;
    return clause;
}

} // namespace

CnfFormula random_3sat(Rng& rng, int num_vars, int num_clauses) {
    CnfFormula f;
    f.num_vars = num_vars;
    for (int i = 0; i < num_clauses; ++i)
        f.add_clause(random_clause(rng, num_vars, 3));
    return f;
}

CnfFormula random_mixed_formula(Rng& rng, int num_vars, int num_clauses) {
    // Mostly binary/ternary clauses, a sprinkle of units and quaternaries.
    std::discrete_distribution<int> width_dist({5, 30, 45, 20});
    CnfFormula f;
    f.num_vars = num_vars;
    for (int i = 0; i < num_clauses; ++i)
        f.add_clause(random_clause(rng, num_vars, 1 + width_dist(rng)));
    return f;
}

CnfFormula pigeonhole(int holes) {
    const int pigeons = holes + 1;
    CnfFormula f;
    f.num_vars = pigeons * holes;
    const auto var = [holes](int pigeon, int hole) { return pigeon * holes + hole + 1; };
    for (int p = 0; p < pigeons; ++p) {
        std::vector<int> somewhere;
        for (int h = 0; h < holes; ++h)
            somewhere.push_back(var(p, h));
        f.add_clause(somewhere);
    }
    for (int h = 0; h < holes; ++h)
        for (int p = 0; p < pigeons; ++p)
            for (int q = p + 1; q < pigeons; ++q)
                f.add_clause({-var(p, h), -var(q, h)});
    return f;
}

const std::vector<double>& activity_grid() {
    static const std::vector<double> grid = [] {
        const double mantissas[] = {1.0, 1.5, 2.0, 3.0, 5.0, 7.0};
        std::vector<double> g;
        double decade = 1.0;
        for (int e = 0; e < 10; ++e, decade *= 10.0)
            for (double m : mantissas)
                g.push_back(m * decade);
        return g;
    }();
    return grid;
}

double random_activity(Rng& rng) {
    const std::vector<double>& grid = activity_grid();
    std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
    return grid[pick(rng)];
}

MeasureVector random_measure_vector(Rng& rng, int max_size) {
    MeasureVector v;
    v.size = std::uniform_int_distribution<int>(1, max_size)(rng);
    v.lbd = std::uniform_int_distribution<int>(1, v.size)(rng);
    v.activity = random_activity(rng);
    return v;
}

void fill_random_learnts(Rng& rng, ClauseDatabase& db, int num_vars, int count) {
    for (int i = 0; i < count; ++i) {
        const int width = std::uniform_int_distribution<int>(1, std::min(8, num_vars))(rng);
        std::vector<Lit> lits;
        for (int d : random_clause(rng, num_vars, width))
            lits.push_back(Lit::from_dimacs(d));
        const auto lbd = static_cast<std::uint32_t>(
            std::uniform_int_distribution<int>(1, width)(rng));
        const ClauseRef ref = db.add_learnt(std::move(lits), lbd);
        db[ref].activity = random_activity(rng);
    }
}

bool naive_satisfies(const CnfFormula& formula, const std::vector<bool>& assignment) {
    for (const std::vector<Lit>& clause : formula.clauses) {
        bool clause_sat = false;
        for (Lit lit : clause) {
            const int d = lit.to_dimacs();
            const bool var_value = assignment[static_cast<std::size_t>(std::abs(d))];
            if ((d > 0 && var_value) || (d < 0 && !var_value)) {
                clause_sat = true;
                break;
            }
        }
        if (!clause_sat)
            return false;
    }
    return true;
}

} // namespace domsat::testsupport
