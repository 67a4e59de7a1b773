#include "domsat/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace domsat {

bool should_reduce(std::uint64_t conflicts_since_last, std::uint64_t reductions_so_far,
                   const ReduceSchedule& schedule) {
    return conflicts_since_last >= schedule.base + schedule.increment * reductions_so_far;
}

ReductionStrategy ReductionStrategy::sort_half(MeasureId criterion) {
    ReductionStrategy s;
    s.kind = Kind::SortHalf;
    s.criterion = criterion;
    return s;
}

ReductionStrategy ReductionStrategy::dominance(MeasureSet measures) {
    ReductionStrategy s;
    s.kind = Kind::Dominance;
    s.measures = std::move(measures);
    return s;
}

ReductionStrategy ReductionStrategy::from_cli(const std::string& name,
                                              const std::string& measures_csv) {
    if (name == "none")
        return none();
    if (name == "size")
        return sort_half(MeasureId::Size);
    if (name == "lbd")
        return sort_half(MeasureId::Lbd);
    if (name == "cvsids")
        return sort_half(MeasureId::Cvsids);
    if (name == "degcomp") {
        if (measures_csv.empty())
            return dominance(MeasureSet::all());
        std::vector<MeasureId> ids;
        std::istringstream in(measures_csv);
        std::string token;
        while (std::getline(in, token, ','))
            ids.push_back(measure_from_name(token));
        return dominance(MeasureSet(ids));
    }
    throw std::invalid_argument("unknown reduction strategy: " + name);
}

std::string ReductionStrategy::to_string() const {
    switch (kind) {
    case Kind::None:
        return "none";
    case Kind::SortHalf:
        return measure_name(criterion);
    case Kind::Dominance:
        return "degcomp(" + measures->to_string() + ")";
    }
    return "?";
}

std::optional<ClauseRef> min_deg_comp(const ClauseDatabase& db, const MeasureSet& measures,
                                      int num_vars) {
    std::optional<ClauseRef> best;
    double best_deg = 0.0;
    for (ClauseRef ref : db.learnts()) {
        const Clause& c = db[ref];
        if (!c.reduction_eligible())
            continue;
        const double deg = deg_comp(measures_of(c), num_vars, measures);
        if (!best || deg < best_deg) {
            best = ref;
            best_deg = deg;
        }
    }
    return best;
}

bool alg2_dominates(const MeasureVector& reference, const MeasureVector& c,
                    const MeasureSet& measures) {
    for (MeasureId m : measures) {
        // The reference must win outright on m; a tie (or a loss) keeps c.
        if (prefer(m, reference.raw(m), c.raw(m)) != Preference::FirstPreferred)
            return false;
    }
    return true;
}

namespace {

bool locked(const ReductionHooks& hooks, ClauseRef ref) {
    return hooks.is_locked && hooks.is_locked(ref);
}

/// Removes the victims through the hooks and fills in the report tallies.
ReductionReport finish(ClauseDatabase& db, std::vector<ClauseRef>&& victims,
                       std::uint64_t before, const ReductionHooks& hooks) {
    if (hooks.on_victims)
        hooks.on_victims(victims);
    for (ClauseRef ref : victims) {
        if (hooks.detach)
            hooks.detach(ref);
        db.release(ref);
    }
    std::erase_if(db.learnts(), [&db](ClauseRef ref) { return db[ref].dead; });
    ReductionReport report;
    report.before = before;
    report.deleted = victims.size();
    for (ClauseRef ref : db.learnts())
        if (db[ref].is_protected())
            ++report.protected_kept;
    if (before > 0)
        report.deleted_fraction = static_cast<double>(report.deleted) / static_cast<double>(before);
    return report;
}

} // namespace

ReductionReport reduce_sort_half(ClauseDatabase& db, MeasureId criterion,
                                 const ReductionHooks& hooks) {
    const std::uint64_t before = db.num_learnts();
    std::vector<ClauseRef>& learnts = db.learnts();

    // Worst candidates first: large lbd/size, or small activity. stable_sort
    // keeps database order between equals, making the deleted set
    // deterministic.
    const auto worse = [&](ClauseRef a, ClauseRef b) {
        const Clause& ca = db[a];
        const Clause& cb = db[b];
        switch (criterion) {
        case MeasureId::Size:
            return ca.size() > cb.size();
        case MeasureId::Lbd:
            return ca.lbd > cb.lbd;
        case MeasureId::Cvsids:
            return ca.activity < cb.activity;
        }
        return false;
    };
    std::stable_sort(learnts.begin(), learnts.end(), worse);

    std::vector<ClauseRef> victims;
    const std::size_t limit = learnts.size() / 2;
    for (std::size_t i = 0; i < limit; ++i) {
        const ClauseRef ref = learnts[i];
        if (db[ref].reduction_eligible() && !locked(hooks, ref))
            victims.push_back(ref);
    }
    return finish(db, std::move(victims), before, hooks);
}

ReductionReport reduce_dominance(ClauseDatabase& db, const MeasureSet& measures, int num_vars,
                                 const ReductionHooks& hooks) {
    const std::uint64_t before = db.num_learnts();

    const std::optional<ClauseRef> reference = min_deg_comp(db, measures, num_vars);
    if (!reference)
        return finish(db, {}, before, hooks);
    const MeasureVector reference_vec = measures_of(db[*reference]);

    std::vector<ClauseRef> victims;
    for (ClauseRef ref : db.learnts()) {
        if (ref == *reference)
            continue;
        if (!db[ref].reduction_eligible() || locked(hooks, ref))
            continue;
        if (alg2_dominates(reference_vec, measures_of(db[ref]), measures))
            victims.push_back(ref);
    }
    ReductionReport report = finish(db, std::move(victims), before, hooks);
    report.reference = reference_vec;
    return report;
}

ReductionReport reduce(ClauseDatabase& db, const ReductionStrategy& strategy, int num_vars,
                       const ReductionHooks& hooks) {
    switch (strategy.kind) {
    case ReductionStrategy::Kind::None: {
        ReductionReport report;
        report.before = db.num_learnts();
        for (ClauseRef ref : db.learnts())
            if (db[ref].is_protected())
                ++report.protected_kept;
        return report;
    }
    case ReductionStrategy::Kind::SortHalf:
        return reduce_sort_half(db, strategy.criterion, hooks);
    case ReductionStrategy::Kind::Dominance:
        assert(strategy.measures);
        return reduce_dominance(db, *strategy.measures, num_vars, hooks);
    }
    return {};
}

} // namespace domsat
