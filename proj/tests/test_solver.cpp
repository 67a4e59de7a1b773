#include "domsat/solver.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "domsat/dimacs.hpp"
#include "domsat/oracle.hpp"
#include "support/generators.hpp"

using namespace domsat;
namespace ts = domsat::testsupport;

namespace {

Lit pos(int v) { return Lit::positive(v); }
Lit neg(int v) { return Lit::negative(v); }

SolverConfig quiet_config() {
    SolverConfig c;
    c.reduction = ReductionStrategy::none();
    return c;
}

} // namespace

TEST(SolverConfig, RejectsOutOfRangeParameters) {
    SolverConfig c;
    c.var_decay = 1.0;
    EXPECT_THROW(c.check(), std::invalid_argument);
    c = SolverConfig{};
    c.clause_decay = 0.0;
    EXPECT_THROW(c.check(), std::invalid_argument);
    c = SolverConfig{};
    c.luby_unit = 0;
    EXPECT_THROW(c.check(), std::invalid_argument);
    c = SolverConfig{};
    c.time_budget_s = -1.0;
    EXPECT_THROW(c.check(), std::invalid_argument);
    c = SolverConfig{};
    c.schedule.base = 0;
    EXPECT_THROW(c.check(), std::invalid_argument);
    EXPECT_NO_THROW(SolverConfig{}.check());
}

TEST(Solver, SolvesTrivialSatFormula) {
    Solver s;
    s.add_clause({1, 2});
    s.add_clause({-1, 2});
    EXPECT_EQ(s.solve(), SolveOutcome::Sat);
    EXPECT_TRUE(s.model()[2]);
}

TEST(Solver, EmptyFormulaIsSat) {
    Solver s;
    EXPECT_EQ(s.solve(), SolveOutcome::Sat);
    EXPECT_EQ(s.stats().decisions, 0u);
}

TEST(Solver, AllAssignmentsBlockedIsUnsat) {
    Solver s;
    s.add_clause({1, 2});
    s.add_clause({1, -2});
    s.add_clause({-1, 2});
    s.add_clause({-1, -2});
    EXPECT_EQ(s.solve(), SolveOutcome::Unsat);
}

TEST(Solver, ContradictoryUnitsAreUnsatAtAddTime) {
    Solver s;
    EXPECT_TRUE(s.add_clause({1}));
    EXPECT_FALSE(s.add_clause({-1}));
    EXPECT_EQ(s.solve(), SolveOutcome::Unsat);
}

TEST(Solver, EmptyClauseIsUnsat) {
    Solver s;
    EXPECT_FALSE(s.add_clause(std::vector<Lit>{}));
    EXPECT_EQ(s.solve(), SolveOutcome::Unsat);
}

TEST(Solver, UnitChainPropagatesWithoutDecisions) {
    Solver s;
    s.add_clause({1});
    s.add_clause({-1, 2});
    s.add_clause({-2, 3});
    EXPECT_EQ(s.solve(), SolveOutcome::Sat);
    EXPECT_TRUE(s.model()[1]);
    EXPECT_TRUE(s.model()[2]);
    EXPECT_TRUE(s.model()[3]);
    EXPECT_EQ(s.stats().conflicts, 0u);
}

TEST(Solver, TautologiesAndDuplicatesAreHarmless) {
    Solver s;
    EXPECT_TRUE(s.add_clause({1, -1}));   // dropped
    EXPECT_TRUE(s.add_clause({2, 2, 3})); // deduplicated
    EXPECT_EQ(s.num_vars(), 3);
    EXPECT_EQ(s.solve(), SolveOutcome::Sat);
}

TEST(Solver, GrowsVariableRangeFromClauses) {
    Solver s;
    s.add_clause({100});
    EXPECT_EQ(s.num_vars(), 100);
    EXPECT_EQ(s.value(pos(100)), Solver::Value::True);
}

TEST(SolverSteps, AssumeAndPropagateChain) {
    Solver s(quiet_config());
    s.add_clause({-1, 2});
    s.add_clause({-2, 3});

    EXPECT_EQ(s.decision_level(), 0);
    s.assume(pos(1));
    EXPECT_EQ(s.decision_level(), 1);
    EXPECT_FALSE(s.propagate_to_fixpoint().has_value());

    EXPECT_EQ(s.value(pos(1)), Solver::Value::True);
    EXPECT_EQ(s.value(pos(2)), Solver::Value::True);
    EXPECT_EQ(s.value(pos(3)), Solver::Value::True);
    EXPECT_EQ(s.trail().size(), 3u);
    EXPECT_NO_THROW(s.validate_trail());

    EXPECT_THROW(s.assume(pos(2)), std::logic_error);

    s.backjump_to(0);
    EXPECT_EQ(s.decision_level(), 0);
    EXPECT_EQ(s.value(pos(1)), Solver::Value::Undef);
    EXPECT_EQ(s.value(pos(2)), Solver::Value::Undef);
    EXPECT_TRUE(s.trail().empty());
}

TEST(SolverSteps, PropagationReportsConflicts) {
    Solver s(quiet_config());
    s.add_clause({-1, 2});
    s.add_clause({-1, -2});
    s.assume(pos(1));
    const auto confl = s.propagate_to_fixpoint();
    ASSERT_TRUE(confl.has_value());
    // The conflicting clause is the one whose literals are all false.
    for (Lit l : s.db()[*confl].lits)
        EXPECT_EQ(s.value(l), Solver::Value::False);
}

TEST(SolverSteps, ReasonLockingTracksPropagations) {
    Solver s(quiet_config());
    s.add_clause({-1, 2});
    s.assume(pos(1));
    ASSERT_FALSE(s.propagate_to_fixpoint().has_value());

    // Find the binary clause; it is the reason for 2 and therefore locked.
    const ClauseRef reason = s.db().originals()[0];
    EXPECT_TRUE(s.is_reason_locked(reason));
    s.backjump_to(0);
    EXPECT_FALSE(s.is_reason_locked(reason));
}

TEST(SolverSteps, PickBranchLiteralUsesActivityThenIndex) {
    Solver s(quiet_config());
    s.add_clause({1, 2, 3});

    // All activities zero: lowest index wins, default phase is negative.
    EXPECT_EQ(s.pick_branch_literal(), neg(1));

    s.bump_var_activity(3);
    EXPECT_EQ(s.pick_branch_literal(), neg(3));
}

TEST(SolverSteps, PhaseSavingRestoresLastValue) {
    Solver s(quiet_config());
    s.add_clause({1, 2});
    s.bump_var_activity(1); // make var 1 the clear favourite
    s.assume(pos(1));
    s.backjump_to(0);
    // Saved phase was true, so the next decision on var 1 is positive.
    EXPECT_EQ(s.pick_branch_literal(), pos(1));
}

TEST(SolverSteps, AnalyzeFindsFirstUip) {
    Solver s(quiet_config());
    s.add_clause({-1, -2, 3});
    s.add_clause({-1, -2, -3});

    s.assume(pos(1));
    ASSERT_FALSE(s.propagate_to_fixpoint().has_value());
    s.assume(pos(2));
    const auto confl = s.propagate_to_fixpoint();
    ASSERT_TRUE(confl.has_value());

    std::vector<Lit> learnt;
    int btlevel = -1;
    std::uint32_t lbd = 0;
    s.analyze_conflict(*confl, learnt, btlevel, lbd);

    ASSERT_EQ(learnt.size(), 2u);
    EXPECT_EQ(learnt[0], neg(2)); // the asserting literal (first UIP)
    EXPECT_EQ(learnt[1], neg(1));
    EXPECT_EQ(btlevel, 1);
    EXPECT_EQ(lbd, 2u);
}

TEST(SolverSteps, AnalyzeLearnsUnitAtLevelZero) {
    Solver s(quiet_config());
    s.add_clause({-2, 3});
    s.add_clause({-2, -3});

    s.assume(pos(2));
    const auto confl = s.propagate_to_fixpoint();
    ASSERT_TRUE(confl.has_value());

    std::vector<Lit> learnt;
    int btlevel = -1;
    std::uint32_t lbd = 0;
    s.analyze_conflict(*confl, learnt, btlevel, lbd);
    EXPECT_EQ(learnt, std::vector<Lit>{neg(2)});
    EXPECT_EQ(btlevel, 0);
    EXPECT_EQ(lbd, 1u);
}

TEST(SolverSteps, MinimizationDropsRedundantLiterals) {
    const auto learn_once = [](bool minimize) {
        SolverConfig config = quiet_config();
        config.minimize_learnt = minimize;
        Solver s(config);
        s.add_clause({-1, 2});      // 1 implies 2
        s.add_clause({-3, 4});      // 3 implies 4
        s.add_clause({-4, -2, 5});  // 4 and 2 imply 5
        s.add_clause({-5, -1, -4}); // conflicts once both chains fire

        s.assume(pos(1));
        EXPECT_FALSE(s.propagate_to_fixpoint().has_value());
        s.assume(pos(3));
        const auto confl = s.propagate_to_fixpoint();
        EXPECT_TRUE(confl.has_value());

        std::vector<Lit> learnt;
        int btlevel = -1;
        std::uint32_t lbd = 0;
        s.analyze_conflict(*confl, learnt, btlevel, lbd);
        EXPECT_EQ(btlevel, 1);
        return learnt;
    };

    const std::vector<Lit> raw = learn_once(false);
    const std::vector<Lit> minimized = learn_once(true);

    // The first UIP is 4: the conflict needs both 4 itself and 5, which 4
    // implies. ~2 follows from ~1 via the implication, so minimization
    // removes it.
    EXPECT_EQ(raw, (std::vector<Lit>{neg(4), neg(1), neg(2)}));
    EXPECT_EQ(minimized, (std::vector<Lit>{neg(4), neg(1)}));
}

TEST(SolverSteps, ComputeLbdCountsDistinctLevels) {
    Solver s(quiet_config());
    s.add_clause({1, 2, 3, 4});
    s.assume(pos(1));
    s.assume(pos(2));
    s.assume(pos(3));

    const std::vector<Lit> lits1 = {pos(1), pos(2), pos(3)};
    EXPECT_EQ(s.compute_lbd(lits1), 3u);
    const std::vector<Lit> lits2 = {pos(1), neg(1)};
    EXPECT_EQ(s.compute_lbd(lits2), 1u);
}

TEST(Solver, LearnsLockedUnitClauses) {
    Solver s(quiet_config());
    s.add_clause({2, 3});
    s.add_clause({2, -3});
    ASSERT_EQ(s.solve(), SolveOutcome::Sat);
    EXPECT_TRUE(s.model()[2]);

    // The search must have learnt the unit (2); it stays reason-locked.
    const auto& learnts = s.db().learnts();
    const auto unit = std::find_if(learnts.begin(), learnts.end(), [&](ClauseRef r) {
        return s.db()[r].size() == 1;
    });
    ASSERT_NE(unit, learnts.end());
    EXPECT_EQ(s.db()[*unit].lits[0], pos(2));
    EXPECT_TRUE(s.is_reason_locked(*unit));
}

TEST(Solver, PigeonholeIsUnsat) {
    Solver s(quiet_config());
    s.add_formula(ts::pigeonhole(4));
    EXPECT_EQ(s.solve(), SolveOutcome::Unsat);
    EXPECT_GT(s.stats().conflicts, 0u);
    EXPECT_GT(s.stats().learned, 0u);
}

TEST(Solver, ConflictBudgetYieldsUnknown) {
    SolverConfig config = quiet_config();
    config.conflict_budget = 10;
    Solver s(config);
    s.add_formula(ts::pigeonhole(5));
    EXPECT_EQ(s.solve(), SolveOutcome::Unknown);
    EXPECT_EQ(s.stats().conflicts, 10u);
}

TEST(Solver, TimeBudgetYieldsUnknown) {
    SolverConfig config = quiet_config();
    config.time_budget_s = 1e-9; // expires at the first 1024-conflict check
    Solver s(config);
    s.add_formula(ts::pigeonhole(7));
    EXPECT_EQ(s.solve(), SolveOutcome::Unknown);
    EXPECT_GE(s.stats().conflicts, 1024u);
}

TEST(Solver, RestartsFollowTheConfiguredUnit) {
    const auto restarts_with_unit = [](int unit) {
        SolverConfig config = quiet_config();
        config.luby_unit = unit;
        Solver s(config);
        s.add_formula(ts::pigeonhole(4));
        EXPECT_EQ(s.solve(), SolveOutcome::Unsat);
        return s.stats();
    };
    const SolverStats frequent = restarts_with_unit(1);
    const SolverStats rare = restarts_with_unit(1000000);
    EXPECT_GT(frequent.restarts, 0u);
    EXPECT_EQ(rare.restarts, 0u);
    // Every restart consumes at least `unit` conflicts.
    EXPECT_LE(frequent.restarts, frequent.conflicts);
}

TEST(Solver, DeterministicAcrossRuns) {
    ts::Rng rng(99);
    const CnfFormula f = ts::random_3sat(rng, 40, 170);

    Solver a;
    a.add_formula(f);
    const SolveOutcome oa = a.solve();
    Solver b;
    b.add_formula(f);
    const SolveOutcome ob = b.solve();

    EXPECT_EQ(oa, ob);
    EXPECT_EQ(a.stats().decisions, b.stats().decisions);
    EXPECT_EQ(a.stats().conflicts, b.stats().conflicts);
    EXPECT_EQ(a.stats().propagations, b.stats().propagations);
    EXPECT_EQ(a.stats().learned, b.stats().learned);
    if (oa == SolveOutcome::Sat) {
        EXPECT_EQ(a.model(), b.model());
    }
}

TEST(Solver, AgreesWithOracleOnSmallInstances) {
    ts::Rng rng(20240818);
    for (int round = 0; round < 100; ++round) {
        const CnfFormula f = ts::random_mixed_formula(rng, 10, 25 + static_cast<int>(rng() % 20));
        const bool expected_sat = oracle::brute_force_sat(f).has_value();

        Solver s;
        s.add_formula(f);
        const SolveOutcome outcome = s.solve();
        ASSERT_NE(outcome, SolveOutcome::Unknown);
        EXPECT_EQ(outcome == SolveOutcome::Sat, expected_sat) << write_dimacs(f);
        if (outcome == SolveOutcome::Sat) {
            EXPECT_TRUE(ts::naive_satisfies(f, s.model()));
        }
    }
}

TEST(Solver, LearnedClausesAreEntailed) {
    ts::Rng rng(31415);
    for (int round = 0; round < 20; ++round) {
        const CnfFormula f = ts::random_mixed_formula(rng, 9, 30);
        std::vector<std::vector<Lit>> learned;
        Solver s;
        s.set_learned_callback(
            [&](const std::vector<Lit>& lits, std::uint32_t) { learned.push_back(lits); });
        s.add_formula(f);
        s.solve();
        for (const auto& clause : learned)
            EXPECT_TRUE(oracle::brute_force_entails(f, clause));
    }
}

TEST(Solver, ReductionRunsOnSchedule) {
    SolverConfig config;
    config.reduction = ReductionStrategy::sort_half(MeasureId::Lbd);
    config.schedule = {50, 0};
    Solver s(config);
    s.add_formula(ts::pigeonhole(5));

    std::size_t observer_calls = 0;
    s.set_reduction_observer([&](const ClauseDatabase& db, std::span<const ClauseRef> victims) {
        ++observer_calls;
        for (ClauseRef r : victims) {
            EXPECT_TRUE(db[r].reduction_eligible());
            EXPECT_FALSE(s.is_reason_locked(r));
        }
    });

    EXPECT_EQ(s.solve(), SolveOutcome::Unsat);
    EXPECT_GT(s.stats().reductions, 0u);
    EXPECT_GT(s.stats().deleted, 0u);
    EXPECT_EQ(observer_calls, s.stats().reductions);
    EXPECT_EQ(s.db().num_learnts(), s.stats().learned - s.stats().deleted);
}

TEST(Solver, OutcomeUnaffectedByReductionStrategy) {
    ts::Rng rng(8080);
    const ReductionStrategy strategies[] = {
        ReductionStrategy::none(),
        ReductionStrategy::sort_half(MeasureId::Size),
        ReductionStrategy::sort_half(MeasureId::Lbd),
        ReductionStrategy::sort_half(MeasureId::Cvsids),
        ReductionStrategy::dominance(MeasureSet::all()),
    };
    for (int round = 0; round < 25; ++round) {
        const CnfFormula f = ts::random_mixed_formula(rng, 10, 35);
        const bool expected_sat = oracle::brute_force_sat(f).has_value();
        for (const ReductionStrategy& strategy : strategies) {
            SolverConfig config;
            config.reduction = strategy;
            config.schedule = {10, 5}; // reduce aggressively to exercise the path
            Solver s(config);
            s.add_formula(f);
            const SolveOutcome outcome = s.solve();
            ASSERT_NE(outcome, SolveOutcome::Unknown);
            EXPECT_EQ(outcome == SolveOutcome::Sat, expected_sat);
            if (outcome == SolveOutcome::Sat) {
                EXPECT_TRUE(ts::naive_satisfies(f, s.model()));
            }
        }
    }
}

TEST(Solver, ParanoidValidationPasses) {
    ts::Rng rng(606);
    SolverConfig config;
    config.validate = true;
    config.schedule = {20, 10};
    for (int round = 0; round < 10; ++round) {
        const CnfFormula f = ts::random_mixed_formula(rng, 12, 40);
        Solver s(config);
        s.add_formula(f);
        EXPECT_NO_THROW(s.solve());
    }
}
