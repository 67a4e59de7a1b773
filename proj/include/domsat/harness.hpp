#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "domsat/cnf.hpp"
#include "domsat/solver.hpp"

namespace domsat {

/// Settings for one benchmark run (one solver configuration applied to one
/// or many instances).
struct RunConfig {
    ReductionStrategy strategy = ReductionStrategy::dominance(MeasureSet::all());
    ReduceSchedule schedule;
    /// CVSIDS decay; short benchmark runs want faster decay than the solver
    /// default so clause activities spread out within the budget.
    double clause_decay = 0.999;
    double timeout_s = 0.0;            ///< 0 = unlimited
    std::uint64_t conflict_budget = 0; ///< 0 = unlimited
    bool validate = false;

    /// Corpus runs must terminate: throws std::invalid_argument unless a
    /// time or conflict budget is set.
    void check_bounded() const;

    SolverConfig solver_config() const;
};

/// One CSV row: the outcome and counters of a single instance run.
struct InstanceStats {
    std::string name;
    SolveOutcome outcome = SolveOutcome::Unknown;
    double time_s = 0.0;
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t restarts = 0;
    std::uint64_t reductions = 0;
    std::uint64_t learned = 0;
    std::uint64_t deleted = 0;
    double deleted_fraction = 0.0;
    /// Mean wall time of one reduction pass; empty when no pass ran.
    std::optional<double> time_per_reduction_s;
    /// Set instead of the counters when the instance could not be run.
    std::string error;

    bool solved() const {
        return outcome == SolveOutcome::Sat || outcome == SolveOutcome::Unsat;
    }
};

/// Corpus-level aggregation; fraction statistics are over solved instances.
struct CorpusSummary {
    std::size_t instances = 0;
    std::size_t solved = 0;
    std::size_t sat = 0;
    std::size_t unsat = 0;
    std::size_t unknown = 0;
    double avg_time_solved_s = 0.0;
    double deleted_fraction_mean = 0.0;
    double deleted_fraction_std = 0.0; ///< population standard deviation
};

CorpusSummary summarize(const std::vector<InstanceStats>& stats);

/// Runs one already-parsed formula under the configuration.
InstanceStats run_formula(const std::string& name, const CnfFormula& formula,
                          const RunConfig& config);

/// Parses the DIMACS file and runs it; parse failures land in .error.
InstanceStats run_instance(const std::string& path, const RunConfig& config);

/// Runs every instance, optionally on several worker threads. Results keep
/// the order of paths regardless of scheduling.
std::vector<InstanceStats> run_corpus(const std::vector<std::string>& paths,
                                      const RunConfig& config, int jobs = 1);

/// A directory yields its *.cnf files sorted by name; a regular file is read
/// as a list of paths (one per line, '#' comments allowed).
std::vector<std::string> collect_instances(const std::string& dir_or_list);

/// CSV with a header row, one row per instance, and a trailing SUMMARY row
/// (solved/total, average solved time, counter totals, mean deleted
/// fraction).
void write_stats_csv(std::ostream& out, const std::vector<InstanceStats>& stats);

/// Reads rows written by write_stats_csv, ignoring header and SUMMARY.
std::vector<InstanceStats> read_stats_csv(std::istream& in);

/// Cactus-plot data: solved instances sorted by time, one "rank time_s" line
/// each.
void write_cactus(std::ostream& out, const std::vector<InstanceStats>& stats);

/// Results of one strategy over a corpus, labelled for cross-tabulation.
struct StrategyResults {
    std::string label;
    std::vector<InstanceStats> stats;
};

/// Instances solved by both strategies.
std::size_t commonly_solved(const std::vector<InstanceStats>& a,
                            const std::vector<InstanceStats>& b);

/**
 * Cross-tabulates several strategies over one corpus: a pairwise
 * commonly-solved matrix, then the partition of instances by solved pattern
 * (one +/- per strategy). All result sets must list the same instances in
 * the same order.
 */
void write_crosstab(std::ostream& out, const std::vector<StrategyResults>& results);

} // namespace domsat
