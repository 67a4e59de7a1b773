#include "domsat/oracle.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "support/generators.hpp"

using namespace domsat;
namespace ts = domsat::testsupport;

TEST(Oracle, FindsModelOfSatisfiableFormula) {
    const CnfFormula f = CnfFormula::from_clauses(2, {{1, 2}, {-1, 2}, {1, -2}});
    const auto model = oracle::brute_force_sat(f);
    ASSERT_TRUE(model.has_value());
    EXPECT_TRUE(ts::naive_satisfies(f, *model));
    EXPECT_TRUE((*model)[1]);
    EXPECT_TRUE((*model)[2]);
}

TEST(Oracle, DetectsUnsatisfiable) {
    const CnfFormula f =
        CnfFormula::from_clauses(2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}});
    EXPECT_FALSE(oracle::brute_force_sat(f).has_value());
}

TEST(Oracle, EmptyClauseMeansUnsat) {
    const CnfFormula f = CnfFormula::from_clauses(1, {{}});
    EXPECT_FALSE(oracle::brute_force_sat(f).has_value());
    EXPECT_TRUE(oracle::enumerate_models(f).empty());
}

TEST(Oracle, EmptyFormulaHasAllModels) {
    CnfFormula f;
    f.num_vars = 2;
    EXPECT_EQ(oracle::enumerate_models(f).size(), 4u);
}

TEST(Oracle, EnumeratedModelsAreExactlyTheSatisfyingAssignments) {
    ts::Rng rng(777);
    for (int round = 0; round < 30; ++round) {
        const CnfFormula f = ts::random_mixed_formula(rng, 8, 20);
        const auto models = oracle::enumerate_models(f);
        for (const auto& m : models)
            EXPECT_TRUE(ts::naive_satisfies(f, m));

        // Recount satisfying assignments with a straight mask loop.
        std::size_t expected = 0;
        for (unsigned mask = 0; mask < (1u << f.num_vars); ++mask) {
            std::vector<bool> assignment(static_cast<std::size_t>(f.num_vars) + 1);
            for (int v = 1; v <= f.num_vars; ++v)
                assignment[static_cast<std::size_t>(v)] = (mask >> (v - 1)) & 1u;
            if (ts::naive_satisfies(f, assignment))
                ++expected;
        }
        EXPECT_EQ(models.size(), expected);
    }
}

TEST(Oracle, EntailsPropagatedConsequences) {
    const CnfFormula f = CnfFormula::from_clauses(3, {{1}, {-1, 2}});
    EXPECT_TRUE(oracle::brute_force_entails(f, {Lit::from_dimacs(2)}));
    EXPECT_TRUE(oracle::brute_force_entails(f, {Lit::from_dimacs(1), Lit::from_dimacs(3)}));
    EXPECT_FALSE(oracle::brute_force_entails(f, {Lit::from_dimacs(-1)}));
    EXPECT_FALSE(oracle::brute_force_entails(f, {Lit::from_dimacs(3)}));
    // Every original clause is entailed.
    for (const auto& clause : f.clauses)
        EXPECT_TRUE(oracle::brute_force_entails(f, clause));
}

TEST(Oracle, UnsatFormulaEntailsEverything) {
    const CnfFormula f = CnfFormula::from_clauses(1, {{1}, {-1}});
    EXPECT_TRUE(oracle::brute_force_entails(f, {}));
    EXPECT_TRUE(oracle::brute_force_entails(f, {Lit::from_dimacs(-1)}));
}

TEST(Oracle, EnforcesEnumerationLimits) {
    CnfFormula wide;
    wide.num_vars = 26;
    EXPECT_THROW(oracle::brute_force_sat(wide), std::invalid_argument);

    CnfFormula small;
    small.num_vars = 5;
    EXPECT_THROW(oracle::brute_force_sat(small, {.max_vars = 4}), std::invalid_argument);

    CnfFormula many;
    many.num_vars = 2;
    for (int i = 0; i < 10; ++i)
        many.add_clause({1, 2});
    EXPECT_THROW(oracle::brute_force_sat(many, {.max_vars = 25, .max_clauses = 5}),
                 std::invalid_argument);
}

TEST(Oracle, DominanceHandTruths) {
    const MeasureSet all = MeasureSet::all();
    const MeasureVector good{3, 2, 100.0};
    const MeasureVector bad{5, 4, 1.0};
    const MeasureVector off_axis{2, 4, 50.0};

    EXPECT_TRUE(oracle::weakly_dominates(good, bad, all));
    EXPECT_TRUE(oracle::strictly_dominates(good, bad, all));
    EXPECT_FALSE(oracle::weakly_dominates(bad, good, all));
    EXPECT_FALSE(oracle::weakly_dominates(good, off_axis, all));
    EXPECT_TRUE(oracle::weakly_dominates(good, good, all));
    EXPECT_FALSE(oracle::strictly_dominates(good, good, all));

    // Single-measure views.
    EXPECT_TRUE(oracle::strictly_dominates(off_axis, good, MeasureSet({MeasureId::Size})));
    EXPECT_TRUE(oracle::strictly_dominates(good, off_axis, MeasureSet({MeasureId::Cvsids})));
}

TEST(Oracle, UndominatedFlagsAreTheParetoFront) {
    const MeasureVector a{3, 2, 100.0};
    const MeasureVector b{5, 4, 1.0};  // strictly dominated by a
    const MeasureVector c{2, 4, 50.0}; // incomparable with a
    const MeasureVector d = a;         // a twin never strictly dominated
    const auto flags = oracle::brute_force_undominated({a, b, c, d}, MeasureSet::all());
    EXPECT_EQ(flags, (std::vector<bool>{true, false, true, true}));
}
