#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "domsat/measures.hpp"

namespace domsat {

/// When to trigger a reduction pass: after base + increment * (passes so far)
/// conflicts since the previous pass.
struct ReduceSchedule {
    std::uint64_t base = 2000;
    std::uint64_t increment = 300;
};

bool should_reduce(std::uint64_t conflicts_since_last, std::uint64_t reductions_so_far,
                   const ReduceSchedule& schedule);

/**
 * Which learnt clauses a reduction pass removes.
 *
 *  - None: keep everything.
 *  - SortHalf: order worst-first by a single criterion and scan the worst
 *    half, deleting the unprotected clauses in it.
 *  - Dominance: find the reference clause minimizing the degree of
 *    compromise, then delete exactly the clauses it beats on every measure.
 *    The number deleted is whatever the dominance relation yields, not a
 *    fixed half.
 */
struct ReductionStrategy {
    enum class Kind { None, SortHalf, Dominance };

    Kind kind = Kind::None;
    MeasureId criterion = MeasureId::Lbd;       // SortHalf only
    std::optional<MeasureSet> measures;         // Dominance only

    static ReductionStrategy none() { return {}; }
    static ReductionStrategy sort_half(MeasureId criterion);
    static ReductionStrategy dominance(MeasureSet measures);

    /// CLI names: none | size | lbd | cvsids | degcomp. For degcomp,
    /// measures_csv selects the measure combination (default all three).
    static ReductionStrategy from_cli(const std::string& name,
                                      const std::string& measures_csv = "");

    /// Single-measure dominance degenerates to a best-clause sweep; legal,
    /// but worth a warning on the CLI.
    bool degenerate_dominance() const {
        return kind == Kind::Dominance && measures && measures->size() < 2;
    }

    std::string to_string() const;
};

struct ReductionReport {
    std::uint64_t before = 0;         ///< learnt clauses when the pass started
    std::uint64_t deleted = 0;
    std::uint64_t protected_kept = 0; ///< surviving clauses exempt by size/lbd
    double deleted_fraction = 0.0;    ///< deleted / before, 0 for an empty db
    std::optional<MeasureVector> reference; ///< Dominance only: the reference clause
};

/// Engine callbacks threaded through a reduction pass. All optional; tests
/// drive reductions on bare databases without any of them.
struct ReductionHooks {
    /// A clause currently serving as a propagation reason must survive.
    std::function<bool(ClauseRef)> is_locked;
    /// Called for each victim before it is released (unwatch it here).
    std::function<void(ClauseRef)> detach;
    /// Observes the full victim list after selection, before removal.
    std::function<void(std::span<const ClauseRef>)> on_victims;
};

/// Reference-clause selection: the reduction-eligible clause (size > 2 and
/// lbd > 2) with minimal degree of compromise; ties go to the earliest
/// database position. Empty when no clause is eligible.
std::optional<ClauseRef> min_deg_comp(const ClauseDatabase& db, const MeasureSet& measures,
                                      int num_vars);

/// True iff the reference vector is strictly preferred to c on every measure
/// of the set; any tie saves c.
bool alg2_dominates(const MeasureVector& reference, const MeasureVector& c,
                    const MeasureSet& measures);

/// Classical reduction: sort learnts worst-first by the criterion (lbd/size
/// descending, activity ascending; ties keep database order) and delete the
/// unprotected, unlocked clauses among the worst floor(n/2).
ReductionReport reduce_sort_half(ClauseDatabase& db, MeasureId criterion,
                                 const ReductionHooks& hooks = {});

/// Dominance reduction: delete every unprotected, unlocked learnt clause the
/// reference clause strictly beats on all measures. No-op when nothing is
/// eligible.
ReductionReport reduce_dominance(ClauseDatabase& db, const MeasureSet& measures, int num_vars,
                                 const ReductionHooks& hooks = {});

/// Dispatch on the strategy; Kind::None reports an untouched database.
ReductionReport reduce(ClauseDatabase& db, const ReductionStrategy& strategy, int num_vars,
                       const ReductionHooks& hooks = {});

} // namespace domsat
