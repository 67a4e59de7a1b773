#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "domsat/dimacs.hpp"
#include "domsat/harness.hpp"
#include "domsat/solver.hpp"

namespace {

using namespace domsat;

/// Strategy flags shared by `solve` and `bench`.
struct StrategyOptions {
    std::string name = "degcomp";
    std::string measures;
    std::uint64_t schedule_base = ReduceSchedule{}.base;
    std::uint64_t schedule_increment = ReduceSchedule{}.increment;

    void attach(CLI::App& cmd) {
        cmd.add_option("--strategy", name,
                       "learnt-clause reduction strategy: none, size, lbd, cvsids, degcomp")
            ->capture_default_str();
        cmd.add_option("--measures", measures,
                       "measure set for degcomp, e.g. size,lbd,cvsids (default: all)");
        cmd.add_option("--reduce-base", schedule_base, "conflicts before the first reduction")
            ->capture_default_str();
        cmd.add_option("--reduce-inc", schedule_increment,
                       "extra conflicts per completed reduction")
            ->capture_default_str();
    }

    ReductionStrategy strategy() const { return ReductionStrategy::from_cli(name, measures); }
    ReduceSchedule schedule() const { return {schedule_base, schedule_increment}; }

    void warn(std::ostream& out) const {
        const ReductionStrategy s = strategy();
        if (!measures.empty() && s.kind != ReductionStrategy::Kind::Dominance)
            out << "c warning: --measures only applies to the degcomp strategy\n";
        if (s.degenerate_dominance())
            out << "c warning: single-measure dominance degenerates to deleting every clause "
                   "the best one beats\n";
    }
};

void print_model(std::ostream& out, const std::vector<bool>& model, int num_vars) {
    out << "v";
    int on_line = 0;
    for (int v = 1; v <= num_vars; ++v) {
        if (on_line == 25) {
            out << "\nv";
            on_line = 0;
        }
        out << ' ' << (model[static_cast<std::size_t>(v)] ? v : -v);
        ++on_line;
    }
    out << " 0\n";
}

int run_solve(const std::string& path, const StrategyOptions& strat, double timeout_s,
              std::uint64_t conflict_budget, int luby_unit, double var_decay,
              double clause_decay, bool no_minimize, bool validate, bool no_model) {
    const DimacsParseResult parsed = parse_dimacs_file(path);
    if (!parsed.ok()) {
        std::cerr << "c error: " << path << ":" << parsed.error->line << ":"
                  << parsed.error->column << ": " << parsed.error->message << "\n";
        return 1;
    }
    if (parsed.clause_count_mismatch)
        std::cout << "c warning: clause count differs from the header\n";

    SolverConfig config;
    config.reduction = strat.strategy();
    config.schedule = strat.schedule();
    config.time_budget_s = timeout_s;
    config.conflict_budget = conflict_budget;
    config.luby_unit = luby_unit;
    config.var_decay = var_decay;
    config.clause_decay = clause_decay;
    config.minimize_learnt = !no_minimize;
    config.validate = validate;

    std::cout << "c instance: " << path << "\n";
    std::cout << "c strategy: " << config.reduction.to_string() << "\n";
    strat.warn(std::cout);

    Solver solver(config);
    solver.add_formula(*parsed.formula);
    const SolveOutcome outcome = solver.solve();

    const SolverStats& st = solver.stats();
    std::cout << "c time: " << st.solve_time_s << " s\n";
    std::cout << "c decisions: " << st.decisions << "\n";
    std::cout << "c propagations: " << st.propagations << "\n";
    std::cout << "c conflicts: " << st.conflicts << "\n";
    std::cout << "c restarts: " << st.restarts << "\n";
    std::cout << "c reductions: " << st.reductions << "\n";
    std::cout << "c learned: " << st.learned << "\n";
    std::cout << "c deleted: " << st.deleted << " (fraction " << st.deleted_fraction() << ")\n";

    std::cout << "s " << to_string(outcome) << "\n";
    if (outcome == SolveOutcome::Sat && !no_model)
        print_model(std::cout, solver.model(), solver.num_vars());

    switch (outcome) {
    case SolveOutcome::Sat:
        return 10;
    case SolveOutcome::Unsat:
        return 20;
    case SolveOutcome::Unknown:
        return 0;
    }
    return 1;
}

int run_bench(const std::string& corpus, const StrategyOptions& strat, double timeout_s,
              std::uint64_t conflict_budget, double clause_decay, int jobs, bool validate,
              const std::string& csv_path) {
    RunConfig config;
    config.strategy = strat.strategy();
    config.schedule = strat.schedule();
    config.clause_decay = clause_decay;
    config.timeout_s = timeout_s;
    config.conflict_budget = conflict_budget;
    config.validate = validate;

    const std::vector<std::string> paths = collect_instances(corpus);
    if (paths.empty()) {
        std::cerr << "error: no instances found in " << corpus << "\n";
        return 1;
    }
    strat.warn(std::cerr);

    const std::vector<InstanceStats> stats = run_corpus(paths, config, jobs);
    for (const InstanceStats& r : stats)
        if (!r.error.empty())
            std::cerr << "error: " << r.error << "\n";

    if (csv_path.empty()) {
        write_stats_csv(std::cout, stats);
    } else {
        std::ofstream out(csv_path);
        if (!out) {
            std::cerr << "error: cannot write " << csv_path << "\n";
            return 1;
        }
        write_stats_csv(out, stats);
    }

    const CorpusSummary s = summarize(stats);
    std::cerr << "solved " << s.solved << "/" << s.instances << " (sat " << s.sat << ", unsat "
              << s.unsat << ", unknown " << s.unknown << "), avg time over solved "
              << s.avg_time_solved_s << " s\n";
    std::cerr << "deleted fraction over solved: mean " << s.deleted_fraction_mean << ", std "
              << s.deleted_fraction_std << "\n";
    return 0;
}

std::vector<InstanceStats> read_stats_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_stats_csv(in);
}

int with_output(const std::string& out_path, const std::function<void(std::ostream&)>& emit) {
    if (out_path.empty()) {
        emit(std::cout);
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
    }
    emit(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CDCL SAT solver with dominance-based learnt-clause reduction"};
    app.require_subcommand(1);

    // solve ------------------------------------------------------------------
    CLI::App* solve = app.add_subcommand("solve", "solve one DIMACS CNF instance");
    std::string solve_file;
    StrategyOptions solve_strat;
    double solve_timeout = 0.0;
    std::uint64_t solve_conflicts = 0;
    int luby_unit = SolverConfig{}.luby_unit;
    double var_decay = SolverConfig{}.var_decay;
    double clause_decay = SolverConfig{}.clause_decay;
    bool no_minimize = false;
    bool solve_validate = false;
    bool no_model = false;
    solve->add_option("file", solve_file, "DIMACS CNF file")->required();
    solve_strat.attach(*solve);
    solve->add_option("--timeout", solve_timeout, "time budget in seconds (0 = unlimited)");
    solve->add_option("--conflicts", solve_conflicts, "conflict budget (0 = unlimited)");
    solve->add_option("--luby-unit", luby_unit, "restart interval unit")->capture_default_str();
    solve->add_option("--var-decay", var_decay, "VSIDS decay factor")->capture_default_str();
    solve->add_option("--clause-decay", clause_decay, "CVSIDS decay factor")
        ->capture_default_str();
    solve->add_flag("--no-minimize", no_minimize, "disable conflict-clause minimization");
    solve->add_flag("--validate", solve_validate, "check trail invariants while solving");
    solve->add_flag("--no-model", no_model, "suppress the v-line on satisfiable instances");

    // bench ------------------------------------------------------------------
    CLI::App* bench = app.add_subcommand("bench", "run a corpus and emit per-instance CSV");
    std::string bench_corpus;
    StrategyOptions bench_strat;
    double bench_timeout = 0.0;
    std::uint64_t bench_conflicts = 0;
    double bench_clause_decay = RunConfig{}.clause_decay;
    int jobs = 1;
    bool bench_validate = false;
    std::string csv_path;
    bench->add_option("corpus", bench_corpus, "directory of *.cnf files, or a list file")
        ->required();
    bench_strat.attach(*bench);
    bench->add_option("--timeout", bench_timeout, "per-instance time budget in seconds");
    bench->add_option("--conflicts", bench_conflicts, "per-instance conflict budget");
    bench->add_option("--clause-decay", bench_clause_decay, "CVSIDS decay factor")
        ->capture_default_str();
    bench->add_option("--jobs", jobs, "parallel workers")->capture_default_str();
    bench->add_flag("--validate", bench_validate, "check trail invariants while solving");
    bench->add_option("--csv", csv_path, "write the CSV here instead of stdout");

    // cactus -----------------------------------------------------------------
    CLI::App* cactus = app.add_subcommand("cactus", "cactus-plot data from a bench CSV");
    std::string cactus_csv;
    std::string cactus_out;
    cactus->add_option("csv", cactus_csv, "CSV produced by bench")->required();
    cactus->add_option("-o,--out", cactus_out, "output file (default stdout)");

    // crosstab ---------------------------------------------------------------
    CLI::App* crosstab = app.add_subcommand(
        "crosstab", "solved-instance cross-tabulation of several bench CSVs");
    std::vector<std::string> crosstab_csvs;
    std::vector<std::string> crosstab_labels;
    std::string crosstab_out;
    crosstab->add_option("csv", crosstab_csvs, "CSVs produced by bench, one per strategy")
        ->required()
        ->expected(-1);
    crosstab->add_option("--labels", crosstab_labels,
                         "strategy labels (default: CSV file stems)");
    crosstab->add_option("-o,--out", crosstab_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(solve))
            return run_solve(solve_file, solve_strat, solve_timeout, solve_conflicts, luby_unit,
                             var_decay, clause_decay, no_minimize, solve_validate, no_model);
        if (app.got_subcommand(bench))
            return run_bench(bench_corpus, bench_strat, bench_timeout, bench_conflicts,
                             bench_clause_decay, jobs, bench_validate, csv_path);
        if (app.got_subcommand(cactus))
            return with_output(cactus_out, [&](std::ostream& out) {
                write_cactus(out, read_stats_file(cactus_csv));
            });
        if (app.got_subcommand(crosstab)) {
            if (!crosstab_labels.empty() && crosstab_labels.size() != crosstab_csvs.size()) {
                std::cerr << "error: --labels must match the number of CSVs\n";
                return 1;
            }
            std::vector<StrategyResults> results;
            for (std::size_t i = 0; i < crosstab_csvs.size(); ++i) {
                StrategyResults r;
                r.label = i < crosstab_labels.size()
                              ? crosstab_labels[i]
                              : std::filesystem::path(crosstab_csvs[i]).stem().string();
                r.stats = read_stats_file(crosstab_csvs[i]);
                results.push_back(std::move(r));
            }
            return with_output(crosstab_out,
                               [&](std::ostream& out) { write_crosstab(out, results); });
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
