#include "domsat/solver.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "domsat/measures.hpp"

namespace domsat {

const char* to_string(SolveOutcome outcome) {
    switch (outcome) {
    case SolveOutcome::Sat:
        return "SATISFIABLE";
    case SolveOutcome::Unsat:
        return "UNSATISFIABLE";
    case SolveOutcome::Unknown:
        return "UNKNOWN";
    }
    return "?";
}

void SolverConfig::check() const {
    if (!(var_decay > 0.0 && var_decay < 1.0))
        throw std::invalid_argument("var_decay must lie in (0, 1)");
    if (!(clause_decay > 0.0 && clause_decay < 1.0))
        throw std::invalid_argument("clause_decay must lie in (0, 1)");
    if (luby_unit <= 0)
        throw std::invalid_argument("luby_unit must be positive");
    if (time_budget_s < 0.0)
        throw std::invalid_argument("time_budget_s must be non-negative");
    if (schedule.base == 0)
        throw std::invalid_argument("reduction schedule base must be positive");
    if (reduction.kind == ReductionStrategy::Kind::Dominance && !reduction.measures)
        throw std::invalid_argument("dominance reduction needs a measure set");
}

Solver::Solver(SolverConfig config) : config_(std::move(config)) {
    config_.check();
    db_.activity_decay = config_.clause_decay;
    // slot 0 of every per-variable table is unused
    assigns_.push_back(Value::Undef);
    level_.push_back(0);
    reason_.push_back(kClauseRefUndef);
    var_activity_.push_back(0.0);
    heap_pos_.push_back(-1);
    saved_phase_.push_back(false);
    seen_.push_back(0);
    watches_.resize(2);
    lbd_stamp_.assign(2, 0);
}

void Solver::ensure_num_vars(int n) {
    for (int v = num_vars_ + 1; v <= n; ++v) {
        assigns_.push_back(Value::Undef);
        level_.push_back(0);
        reason_.push_back(kClauseRefUndef);
        var_activity_.push_back(0.0);
        heap_pos_.push_back(-1);
        saved_phase_.push_back(false);
        seen_.push_back(0);
        watches_.emplace_back();
        watches_.emplace_back();
        lbd_stamp_.push_back(0);
        heap_insert(v);
    }
    if (n > num_vars_)
        num_vars_ = n;
}

Solver::Value Solver::value(Lit p) const {
    const Value v = assigns_[static_cast<std::size_t>(p.var())];
    if (v == Value::Undef)
        return Value::Undef;
    const bool lit_true = (v == Value::True) != p.is_negative();
    return lit_true ? Value::True : Value::False;
}

Solver::Value Solver::value_of_var(int var) const {
    return assigns_[static_cast<std::size_t>(var)];
}

bool Solver::add_clause(std::vector<Lit> lits) {
    if (!ok_)
        return false;
    assert(decision_level() == 0);

    auto normalized = CnfFormula::normalize_clause(std::move(lits));
    if (!normalized)
        return true; // tautology, trivially satisfied

    int max_var = 0;
    for (Lit l : *normalized)
        max_var = std::max(max_var, l.var());
    ensure_num_vars(max_var);

    // Simplify against the top-level assignment.
    std::vector<Lit> kept;
    for (Lit l : *normalized) {
        const Value v = value(l);
        if (v == Value::True)
            return true; // already satisfied
        if (v == Value::Undef)
            kept.push_back(l);
    }
    if (kept.empty()) {
        ok_ = false;
        return false;
    }

    const ClauseRef ref = db_.add_original(std::move(kept));
    const Clause& c = db_[ref];
    if (c.size() == 1)
        enqueue(c.lits[0], ref); // units carry themselves as reason
    else
        attach_clause(ref);
    return true;
}

bool Solver::add_clause(std::initializer_list<int> dimacs_lits) {
    std::vector<Lit> lits;
    lits.reserve(dimacs_lits.size());
    for (int d : dimacs_lits) {
        assert(d != 0);
        lits.push_back(Lit::from_dimacs(d));
    }
    return add_clause(std::move(lits));
}

bool Solver::add_formula(const CnfFormula& formula) {
    ensure_num_vars(formula.num_vars);
    for (const std::vector<Lit>& clause : formula.clauses)
        if (!add_clause(clause))
            return false;
    return ok_;
}

void Solver::attach_clause(ClauseRef ref) {
    const Clause& c = db_[ref];
    assert(c.size() >= 2);
    watch_list(~c.lits[0]).push_back({ref, c.lits[1]});
    watch_list(~c.lits[1]).push_back({ref, c.lits[0]});
}

void Solver::detach_clause(ClauseRef ref) {
    const Clause& c = db_[ref];
    assert(c.size() >= 2);
    for (const Lit w : {c.lits[0], c.lits[1]}) {
        std::vector<Watcher>& ws = watch_list(~w);
        const auto it = std::find_if(ws.begin(), ws.end(),
                                     [ref](const Watcher& x) { return x.cref == ref; });
        assert(it != ws.end());
        ws.erase(it);
    }
}

void Solver::enqueue(Lit p, ClauseRef reason) {
    assert(value(p) == Value::Undef);
    const auto v = static_cast<std::size_t>(p.var());
    assigns_[v] = p.is_negative() ? Value::False : Value::True;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(p);
}

ClauseRef Solver::propagate() {
    ClauseRef confl = kClauseRefUndef;
    while (qhead_ < trail_.size()) {
        const Lit p = trail_[qhead_++]; // p is now true
        ++stats_.propagations;
        std::vector<Watcher>& ws = watch_list(p);
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < ws.size()) {
            const Watcher w = ws[i];
            if (value(w.blocker) == Value::True) {
                ws[j++] = ws[i++];
                continue;
            }
            const ClauseRef cref = w.cref;
            Clause& c = db_[cref];
            const Lit false_lit = ~p;
            if (c.lits[0] == false_lit)
                std::swap(c.lits[0], c.lits[1]);
            assert(c.lits[1] == false_lit);
            ++i;

            const Lit first = c.lits[0];
            const Watcher moved{cref, first};
            if (first != w.blocker && value(first) == Value::True) {
                ws[j++] = moved;
                continue;
            }

            // Look for an unfalsified replacement watch.
            bool rewatched = false;
            for (std::size_t k = 2; k < c.lits.size(); ++k) {
                if (value(c.lits[k]) != Value::False) {
                    std::swap(c.lits[1], c.lits[k]);
                    watch_list(~c.lits[1]).push_back(moved);
                    rewatched = true;
                    break;
                }
            }
            if (rewatched)
                continue;

            // All other literals are false: unit or conflicting.
            ws[j++] = moved;
            if (value(first) == Value::False) {
                confl = cref;
                qhead_ = trail_.size();
                while (i < ws.size()) // keep the rest of the list intact
                    ws[j++] = ws[i++];
            } else {
                enqueue(first, cref);
            }
        }
        ws.resize(j);
    }
    return confl;
}

std::optional<ClauseRef> Solver::propagate_to_fixpoint() {
    const ClauseRef confl = propagate();
    if (config_.validate)
        validate_trail();
    if (confl == kClauseRefUndef)
        return std::nullopt;
    return confl;
}

void Solver::assume(Lit p) {
    if (value(p) != Value::Undef)
        throw std::logic_error("assume: literal is already assigned");
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    enqueue(p, kClauseRefUndef);
}

void Solver::backjump_to(int level) {
    if (decision_level() <= level)
        return;
    const int bound = trail_lim_[static_cast<std::size_t>(level)];
    for (int i = static_cast<int>(trail_.size()) - 1; i >= bound; --i) {
        const auto v = static_cast<std::size_t>(trail_[static_cast<std::size_t>(i)].var());
        saved_phase_[v] = (assigns_[v] == Value::True);
        assigns_[v] = Value::Undef;
        reason_[v] = kClauseRefUndef;
        if (heap_pos_[v] < 0)
            heap_insert(static_cast<int>(v));
    }
    trail_.resize(static_cast<std::size_t>(bound));
    trail_lim_.resize(static_cast<std::size_t>(level));
    qhead_ = trail_.size();
}

Lit Solver::pick_branch_literal() {
    while (!heap_.empty()) {
        const int v = heap_pop();
        if (assigns_[static_cast<std::size_t>(v)] == Value::Undef) {
            ++stats_.decisions;
            return saved_phase_[static_cast<std::size_t>(v)] ? Lit::positive(v)
                                                             : Lit::negative(v);
        }
    }
    return kLitUndef;
}

void Solver::analyze_conflict(ClauseRef confl, std::vector<Lit>& out_learnt, int& out_btlevel,
                              std::uint32_t& out_lbd) {
    out_learnt.clear();
    out_learnt.push_back(kLitUndef); // slot for the asserting literal

    int path_count = 0;
    Lit p = kLitUndef;
    std::size_t index = trail_.size();
    ClauseRef cref = confl;

    do {
        assert(cref != kClauseRefUndef);
        Clause& c = db_[cref];
        if (c.learnt) {
            bump_clause_activity(db_, cref);
            // Every literal of an antecedent is assigned here, so its lbd can
            // be refreshed; keep the minimum ever observed.
            const std::uint32_t fresh = compute_lbd(c.lits);
            if (fresh < c.lbd)
                c.lbd = fresh;
        }
        for (std::size_t k = (p == kLitUndef ? 0 : 1); k < c.lits.size(); ++k) {
            const Lit q = c.lits[k];
            const auto v = static_cast<std::size_t>(q.var());
            if (!seen_[v] && level_[v] > 0) {
                bump_var_activity(static_cast<int>(v));
                seen_[v] = 1;
                if (level_[v] >= decision_level())
                    ++path_count;
                else
                    out_learnt.push_back(q);
            }
        }
        while (!seen_[static_cast<std::size_t>(trail_[--index].var())]) {
        }
        p = trail_[index];
        cref = reason_[static_cast<std::size_t>(p.var())];
        seen_[static_cast<std::size_t>(p.var())] = 0;
        --path_count;
    } while (path_count > 0);
    out_learnt[0] = ~p;

    analyze_toclear_.assign(out_learnt.begin(), out_learnt.end());
    if (config_.minimize_learnt)
        minimize_learnt(out_learnt);

    if (out_learnt.size() == 1) {
        out_btlevel = 0;
    } else {
        // Watch the highest-level remaining literal; its level is where the
        // clause becomes asserting.
        std::size_t max_i = 1;
        for (std::size_t k = 2; k < out_learnt.size(); ++k)
            if (level_[static_cast<std::size_t>(out_learnt[k].var())] >
                level_[static_cast<std::size_t>(out_learnt[max_i].var())])
                max_i = k;
        std::swap(out_learnt[1], out_learnt[max_i]);
        out_btlevel = level_[static_cast<std::size_t>(out_learnt[1].var())];
    }
    out_lbd = compute_lbd(out_learnt);

    for (Lit l : analyze_toclear_)
        seen_[static_cast<std::size_t>(l.var())] = 0;
}

namespace {
std::uint32_t abstract_level(int level) { return 1u << (level & 31); }
} // namespace

bool Solver::lit_redundant(Lit p, std::uint32_t abstract_levels) {
    analyze_stack_.clear();
    analyze_stack_.push_back(p);
    const std::size_t top = analyze_toclear_.size();
    while (!analyze_stack_.empty()) {
        const Lit q = analyze_stack_.back();
        analyze_stack_.pop_back();
        assert(reason_[static_cast<std::size_t>(q.var())] != kClauseRefUndef);
        const Clause& c = db_[reason_[static_cast<std::size_t>(q.var())]];
        for (std::size_t k = 1; k < c.lits.size(); ++k) {
            const Lit l = c.lits[k];
            const auto v = static_cast<std::size_t>(l.var());
            if (seen_[v] || level_[v] == 0)
                continue;
            if (reason_[v] != kClauseRefUndef &&
                (abstract_level(level_[v]) & abstract_levels) != 0) {
                seen_[v] = 1;
                analyze_stack_.push_back(l);
                analyze_toclear_.push_back(l);
            } else {
                // q depends on a decision (or a foreign level): not redundant.
                for (std::size_t t = top; t < analyze_toclear_.size(); ++t)
                    seen_[static_cast<std::size_t>(analyze_toclear_[t].var())] = 0;
                analyze_toclear_.resize(top);
                return false;
            }
        }
    }
    return true;
}

void Solver::minimize_learnt(std::vector<Lit>& learnt) {
    std::uint32_t levels = 0;
    for (std::size_t k = 1; k < learnt.size(); ++k)
        levels |= abstract_level(level_[static_cast<std::size_t>(learnt[k].var())]);

    std::size_t j = 1;
    for (std::size_t k = 1; k < learnt.size(); ++k) {
        const Lit l = learnt[k];
        if (reason_[static_cast<std::size_t>(l.var())] == kClauseRefUndef ||
            !lit_redundant(l, levels))
            learnt[j++] = l;
    }
    learnt.resize(j);
}

std::uint32_t Solver::compute_lbd(std::span<const Lit> lits) {
    ++lbd_stamp_counter_;
    std::uint32_t distinct = 0;
    for (Lit l : lits) {
        assert(value(l) != Value::Undef);
        const auto lv = static_cast<std::size_t>(level_[static_cast<std::size_t>(l.var())]);
        if (lbd_stamp_[lv] != lbd_stamp_counter_) {
            lbd_stamp_[lv] = lbd_stamp_counter_;
            ++distinct;
        }
    }
    return distinct;
}

void Solver::bump_var_activity(int var) {
    const auto v = static_cast<std::size_t>(var);
    var_activity_[v] += var_inc_;
    if (var_activity_[v] > 1e100) {
        for (int u = 1; u <= num_vars_; ++u)
            var_activity_[static_cast<std::size_t>(u)] *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_pos_[v] >= 0)
        heap_sift_up(static_cast<std::size_t>(heap_pos_[v]));
}

bool Solver::is_reason_locked(ClauseRef ref) const {
    const Clause& c = db_[ref];
    if (c.dead || c.lits.empty())
        return false;
    const Lit first = c.lits[0];
    return value(first) == Value::True &&
           reason_[static_cast<std::size_t>(first.var())] == ref;
}

void Solver::record_learnt(const std::vector<Lit>& learnt, std::uint32_t lbd) {
    ++stats_.learned;
    if (learned_callback_)
        learned_callback_(learnt, lbd);
    const ClauseRef ref = db_.add_learnt(learnt, lbd);
    if (learnt.size() >= 2)
        attach_clause(ref);
    bump_clause_activity(db_, ref);
    enqueue(learnt[0], ref);
    stats_.max_learnts = std::max<std::uint64_t>(stats_.max_learnts, db_.num_learnts());
}

void Solver::reduce_db() {
    const auto t0 = std::chrono::steady_clock::now();
    ReductionHooks hooks;
    hooks.is_locked = [this](ClauseRef r) { return is_reason_locked(r); };
    hooks.detach = [this](ClauseRef r) { detach_clause(r); };
    if (reduction_observer_)
        hooks.on_victims = [this](std::span<const ClauseRef> victims) {
            reduction_observer_(db_, victims);
        };

    const ReductionReport report = reduce(db_, config_.reduction, num_vars_, hooks);

    ++stats_.reductions;
    stats_.deleted += report.deleted;
    conflicts_since_reduce_ = 0;
    stats_.reduce_time_s +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void Solver::restart() {
    backjump_to(0);
    ++stats_.restarts;
    conflicts_since_restart_ = 0;
    // Advance the Luby sequence (1, 1, 2, 1, 1, 2, 4, ...).
    if ((luby_u_ & (~luby_u_ + 1u)) == luby_v_) {
        ++luby_u_;
        luby_v_ = 1;
    } else {
        luby_v_ *= 2;
    }
}

bool Solver::budget_exhausted() const {
    if (config_.conflict_budget > 0 && stats_.conflicts >= config_.conflict_budget)
        return true;
    // The clock is sampled only every 1024 conflicts; timeouts are coarse.
    if (config_.time_budget_s > 0.0 && (stats_.conflicts & 1023u) == 0) {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - solve_start_)
                .count();
        if (elapsed >= config_.time_budget_s)
            return true;
    }
    return false;
}

SolveOutcome Solver::solve() {
    solve_start_ = std::chrono::steady_clock::now();
    SolveOutcome outcome = SolveOutcome::Unknown;

    if (!ok_) {
        outcome = SolveOutcome::Unsat;
    } else {
        assert(decision_level() == 0);
        std::vector<Lit> learnt;
        for (;;) {
            const ClauseRef confl = propagate();
            if (config_.validate)
                validate_trail();
            if (confl != kClauseRefUndef) {
                ++stats_.conflicts;
                ++conflicts_since_restart_;
                ++conflicts_since_reduce_;
                if (decision_level() == 0) {
                    ok_ = false;
                    outcome = SolveOutcome::Unsat;
                    break;
                }
                int btlevel = 0;
                std::uint32_t lbd = 0;
                analyze_conflict(confl, learnt, btlevel, lbd);
                backjump_to(btlevel);
                record_learnt(learnt, lbd);
                var_inc_ *= 1.0 / config_.var_decay;
                decay_clause_activity(db_);
                if (budget_exhausted())
                    break;
                if (config_.reduction.kind != ReductionStrategy::Kind::None &&
                    should_reduce(conflicts_since_reduce_, stats_.reductions, config_.schedule))
                    reduce_db();
            } else {
                if (conflicts_since_restart_ >=
                    static_cast<std::uint64_t>(config_.luby_unit) * luby_v_)
                    restart();
                const Lit next = pick_branch_literal();
                if (next == kLitUndef) {
                    model_.assign(static_cast<std::size_t>(num_vars_) + 1, false);
                    for (int v = 1; v <= num_vars_; ++v)
                        model_[static_cast<std::size_t>(v)] =
                            assigns_[static_cast<std::size_t>(v)] == Value::True;
                    for (ClauseRef ref : db_.originals()) {
                        const Clause& c = db_[ref];
                        const bool sat = std::any_of(c.lits.begin(), c.lits.end(),
                                                     [this](Lit l) { return value(l) == Value::True; });
                        if (!sat)
                            throw std::logic_error("solver produced a non-model");
                    }
                    outcome = SolveOutcome::Sat;
                    break;
                }
                assume(next);
            }
        }
    }

    backjump_to(0);
    stats_.solve_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - solve_start_).count();
    return outcome;
}

void Solver::validate_trail() const {
    const auto fail = [](const std::string& what) {
        throw std::logic_error("trail invariant violated: " + what);
    };
    if (qhead_ > trail_.size())
        fail("qhead beyond trail");

    std::size_t assigned = 0;
    for (int v = 1; v <= num_vars_; ++v)
        if (assigns_[static_cast<std::size_t>(v)] != Value::Undef)
            ++assigned;
    if (assigned != trail_.size())
        fail("assignment count disagrees with trail length");

    for (std::size_t i = 0; i < trail_.size(); ++i) {
        const Lit p = trail_[i];
        const auto v = static_cast<std::size_t>(p.var());
        if (value(p) != Value::True)
            fail("trail literal not true");

        // The level a literal claims must match its trail segment.
        std::size_t expected_level = 0;
        while (expected_level < trail_lim_.size() &&
               static_cast<std::size_t>(trail_lim_[expected_level]) <= i)
            ++expected_level;
        if (level_[v] != static_cast<int>(expected_level))
            fail("literal level disagrees with trail position");

        const ClauseRef r = reason_[v];
        if (r == kClauseRefUndef) {
            // Only decisions lack a reason; each opens its level.
            if (level_[v] == 0 ||
                static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(level_[v] - 1)]) != i)
                fail("non-decision literal without a reason");
        } else {
            const Clause& c = db_[r];
            if (c.dead)
                fail("reason clause is dead");
            if (c.lits.empty() || c.lits[0] != p)
                fail("reason clause does not imply its literal first");
            for (std::size_t k = 1; k < c.lits.size(); ++k) {
                if (value(c.lits[k]) != Value::False)
                    fail("reason clause has a non-false tail literal");
                if (level_[static_cast<std::size_t>(c.lits[k].var())] > level_[v])
                    fail("reason clause tail literal above the implied level");
            }
        }
    }
}

// ---- activity-ordered variable heap ----------------------------------------

bool Solver::heap_less(int a, int b) const {
    const double aa = var_activity_[static_cast<std::size_t>(a)];
    const double ab = var_activity_[static_cast<std::size_t>(b)];
    if (aa != ab)
        return aa > ab;
    return a < b; // deterministic tie-break
}

void Solver::heap_insert(int var) {
    assert(heap_pos_[static_cast<std::size_t>(var)] < 0);
    heap_pos_[static_cast<std::size_t>(var)] = static_cast<int>(heap_.size());
    heap_.push_back(var);
    heap_sift_up(heap_.size() - 1);
}

void Solver::heap_sift_up(std::size_t pos) {
    const int var = heap_[pos];
    while (pos > 0) {
        const std::size_t parent = (pos - 1) / 2;
        if (!heap_less(var, heap_[parent]))
            break;
        heap_[pos] = heap_[parent];
        heap_pos_[static_cast<std::size_t>(heap_[pos])] = static_cast<int>(pos);
        pos = parent;
    }
    heap_[pos] = var;
    heap_pos_[static_cast<std::size_t>(var)] = static_cast<int>(pos);
}

void Solver::heap_sift_down(std::size_t pos) {
    const int var = heap_[pos];
    for (;;) {
        std::size_t child = 2 * pos + 1;
        if (child >= heap_.size())
            break;
        if (child + 1 < heap_.size() && heap_less(heap_[child + 1], heap_[child]))
            ++child;
        if (!heap_less(heap_[child], var))
            break;
        heap_[pos] = heap_[child];
        heap_pos_[static_cast<std::size_t>(heap_[pos])] = static_cast<int>(pos);
        pos = child;
    }
    heap_[pos] = var;
    heap_pos_[static_cast<std::size_t>(var)] = static_cast<int>(pos);
}

int Solver::heap_pop() {
    assert(!heap_.empty());
    const int top = heap_[0];
    heap_pos_[static_cast<std::size_t>(top)] = -1;
    const int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_[0] = last;
        heap_pos_[static_cast<std::size_t>(last)] = 0;
        heap_sift_down(0);
    }
    return top;
}

} // namespace domsat
