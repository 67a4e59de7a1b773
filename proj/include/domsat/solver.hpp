#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "domsat/clause_db.hpp"
#include "domsat/cnf.hpp"
#include "domsat/literal.hpp"
#include "domsat/reduction.hpp"

namespace domsat {

enum class SolveOutcome { Sat, Unsat, Unknown };

const char* to_string(SolveOutcome outcome);

struct SolverConfig {
    ReductionStrategy reduction = ReductionStrategy::dominance(MeasureSet::all());
    ReduceSchedule schedule;

    double var_decay = 0.95;      ///< VSIDS decay factor, in (0, 1)
    double clause_decay = 0.999;  ///< CVSIDS decay factor, in (0, 1)
    int luby_unit = 100;          ///< conflicts per Luby restart unit

    bool minimize_learnt = true;  ///< recursive conflict-clause minimization

    std::uint64_t conflict_budget = 0; ///< 0 = unlimited
    double time_budget_s = 0.0;        ///< 0 = unlimited

    bool validate = false; ///< re-check trail invariants after every propagation

    /// Throws std::invalid_argument on out-of-range parameters.
    void check() const;
};

struct SolverStats {
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t restarts = 0;
    std::uint64_t reductions = 0;
    std::uint64_t learned = 0;      ///< learnt clauses created
    std::uint64_t deleted = 0;      ///< learnt clauses removed by reduction
    std::uint64_t max_learnts = 0;  ///< peak size of the learnt database
    double solve_time_s = 0.0;
    double reduce_time_s = 0.0;     ///< total time spent inside reduction passes

    /// Share of learnt clauses that reduction removed over the whole run.
    double deleted_fraction() const {
        return learned == 0 ? 0.0 : static_cast<double>(deleted) / static_cast<double>(learned);
    }
};

/**
 * A CDCL solver: two-watched-literal propagation, first-UIP learning with
 * recursive minimization, VSIDS branching with phase saving, Luby restarts,
 * and a pluggable learnt-clause reduction strategy.
 *
 * The low-level steps (assume / propagate_to_fixpoint / backjump_to / ...)
 * are public so tests can drive the engine one inference at a time; solve()
 * composes exactly these.
 */
class Solver {
public:
    enum class Value : std::uint8_t { True, False, Undef };

    using LearnedCallback = std::function<void(const std::vector<Lit>&, std::uint32_t lbd)>;
    using ReductionObserver =
        std::function<void(const ClauseDatabase&, std::span<const ClauseRef>)>;

    explicit Solver(SolverConfig config = {});

    // -- problem setup -------------------------------------------------------

    /// Grows the variable range to [1, n]; never shrinks.
    void ensure_num_vars(int n);
    int num_vars() const { return num_vars_; }

    /// Adds a clause, simplifying against the top-level assignment. Returns
    /// false once the formula is known unsatisfiable at level 0.
    bool add_clause(std::vector<Lit> lits);
    bool add_clause(std::initializer_list<int> dimacs_lits);
    bool add_formula(const CnfFormula& formula);

    // -- solving -------------------------------------------------------------

    SolveOutcome solve();

    /// Valid after solve() returns Sat; indexed by variable, entry 0 unused.
    const std::vector<bool>& model() const { return model_; }
    const SolverStats& stats() const { return stats_; }
    const ClauseDatabase& db() const { return db_; }

    // -- engine steps (also the test surface) --------------------------------

    Value value(Lit p) const;
    Value value_of_var(int var) const;
    int decision_level() const { return static_cast<int>(trail_lim_.size()); }
    const std::vector<Lit>& trail() const { return trail_; }

    /// Opens a decision level and enqueues p as its decision. p must be
    /// unassigned.
    void assume(Lit p);

    /// Unit propagation to fixpoint; the conflicting clause if one arises.
    std::optional<ClauseRef> propagate_to_fixpoint();

    /// Undoes all assignments above the given level, saving phases.
    void backjump_to(int level);

    /// The VSIDS decision literal: highest activity (lowest index on ties),
    /// signed by the saved phase. kLitUndef when everything is assigned.
    Lit pick_branch_literal();

    /// First-UIP analysis of a conflict. Fills the learnt clause (asserting
    /// literal first), the backjump level, and the clause's lbd.
    void analyze_conflict(ClauseRef confl, std::vector<Lit>& out_learnt, int& out_btlevel,
                          std::uint32_t& out_lbd);

    /// Distinct decision levels among the literals (all must be assigned).
    std::uint32_t compute_lbd(std::span<const Lit> lits);

    void bump_var_activity(int var);
    double var_activity(int var) const { return var_activity_[static_cast<std::size_t>(var)]; }

    /// True iff the clause is the recorded reason of its first literal.
    bool is_reason_locked(ClauseRef ref) const;

    /// Throws std::logic_error if a trail or reason invariant is broken.
    void validate_trail() const;

    // -- instrumentation -----------------------------------------------------

    /// Invoked for every learnt clause, after minimization.
    void set_learned_callback(LearnedCallback cb) { learned_callback_ = std::move(cb); }
    /// Invoked with each reduction's victim list before removal.
    void set_reduction_observer(ReductionObserver cb) { reduction_observer_ = std::move(cb); }

private:
    struct Watcher {
        ClauseRef cref;
        Lit blocker;
    };

    std::vector<Watcher>& watch_list(Lit p) { return watches_[p.index()]; }

    void attach_clause(ClauseRef ref);
    void detach_clause(ClauseRef ref);
    void enqueue(Lit p, ClauseRef reason);
    ClauseRef propagate();

    bool lit_redundant(Lit p, std::uint32_t abstract_levels);
    void minimize_learnt(std::vector<Lit>& learnt);

    void record_learnt(const std::vector<Lit>& learnt, std::uint32_t lbd);
    void reduce_db();
    void restart();
    bool budget_exhausted() const;

    // heap of unassigned-variable candidates, ordered by activity
    void heap_insert(int var);
    void heap_sift_up(std::size_t pos);
    void heap_sift_down(std::size_t pos);
    bool heap_less(int a, int b) const;
    int heap_pop();

    SolverConfig config_;
    SolverStats stats_;
    ClauseDatabase db_;

    int num_vars_ = 0;
    bool ok_ = true; ///< false once level-0 unsatisfiability is established

    std::vector<Value> assigns_;      // per var
    std::vector<int> level_;          // per var
    std::vector<ClauseRef> reason_;   // per var
    std::vector<Lit> trail_;
    std::vector<int> trail_lim_;      // trail index where each level starts
    std::size_t qhead_ = 0;
    std::vector<std::vector<Watcher>> watches_; // per literal index

    std::vector<double> var_activity_; // per var
    double var_inc_ = 1.0;
    std::vector<int> heap_;           // binary max-heap of vars
    std::vector<int> heap_pos_;       // per var; -1 = not in heap
    std::vector<bool> saved_phase_;   // per var

    // analyze scratch space
    std::vector<char> seen_;
    std::vector<Lit> analyze_stack_;
    std::vector<Lit> analyze_toclear_;
    std::vector<std::uint64_t> lbd_stamp_; // per level
    std::uint64_t lbd_stamp_counter_ = 0;

    std::uint64_t conflicts_since_reduce_ = 0;
    std::uint64_t conflicts_since_restart_ = 0;
    std::uint32_t luby_u_ = 1;
    std::uint32_t luby_v_ = 1;

    std::chrono::steady_clock::time_point solve_start_;

    std::vector<bool> model_;
    LearnedCallback learned_callback_;
    ReductionObserver reduction_observer_;
};

} // namespace domsat
