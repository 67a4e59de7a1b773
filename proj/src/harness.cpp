#include "domsat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "domsat/dimacs.hpp"

namespace domsat {

void RunConfig::check_bounded() const {
    if (timeout_s <= 0.0 && conflict_budget == 0)
        throw std::invalid_argument("corpus runs need a time or conflict budget");
}

SolverConfig RunConfig::solver_config() const {
    SolverConfig sc;
    sc.reduction = strategy;
    sc.schedule = schedule;
    sc.clause_decay = clause_decay;
    sc.time_budget_s = timeout_s;
    sc.conflict_budget = conflict_budget;
    sc.validate = validate;
    return sc;
}

CorpusSummary summarize(const std::vector<InstanceStats>& stats) {
    CorpusSummary s;
    s.instances = stats.size();
    double time_sum = 0.0;
    std::vector<double> fractions;
    for (const InstanceStats& r : stats) {
        switch (r.outcome) {
        case SolveOutcome::Sat:
            ++s.sat;
            break;
        case SolveOutcome::Unsat:
            ++s.unsat;
            break;
        case SolveOutcome::Unknown:
            ++s.unknown;
            break;
        }
        if (r.solved()) {
            time_sum += r.time_s;
            fractions.push_back(r.deleted_fraction);
        }
    }
    s.solved = s.sat + s.unsat;
    if (s.solved > 0)
        s.avg_time_solved_s = time_sum / static_cast<double>(s.solved);
    if (!fractions.empty()) {
        double mean = 0.0;
        for (double f : fractions)
            mean += f;
        mean /= static_cast<double>(fractions.size());
        double var = 0.0;
        for (double f : fractions)
            var += (f - mean) * (f - mean);
        var /= static_cast<double>(fractions.size());
        s.deleted_fraction_mean = mean;
        s.deleted_fraction_std = std::sqrt(var);
    }
    return s;
}

InstanceStats run_formula(const std::string& name, const CnfFormula& formula,
                          const RunConfig& config) {
    InstanceStats r;
    r.name = name;
    Solver solver(config.solver_config());
    solver.add_formula(formula);
    r.outcome = solver.solve();
    const SolverStats& st = solver.stats();
    r.time_s = st.solve_time_s;
    r.decisions = st.decisions;
    r.propagations = st.propagations;
    r.conflicts = st.conflicts;
    r.restarts = st.restarts;
    r.reductions = st.reductions;
    r.learned = st.learned;
    r.deleted = st.deleted;
    r.deleted_fraction = st.deleted_fraction();
    if (st.reductions > 0)
        r.time_per_reduction_s = st.reduce_time_s / static_cast<double>(st.reductions);
    return r;
}

InstanceStats run_instance(const std::string& path, const RunConfig& config) {
    const std::string name = std::filesystem::path(path).filename().string();
    const DimacsParseResult parsed = parse_dimacs_file(path);
    if (!parsed.ok()) {
        InstanceStats r;
        r.name = name;
        std::ostringstream msg;
        msg << path << ":" << parsed.error->line << ":" << parsed.error->column << ": "
            << parsed.error->message;
        r.error = msg.str();
        return r;
    }
    return run_formula(name, *parsed.formula, config);
}

std::vector<InstanceStats> run_corpus(const std::vector<std::string>& paths,
                                      const RunConfig& config, int jobs) {
    config.check_bounded();
    std::vector<InstanceStats> results(paths.size());

    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(paths.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < paths.size(); ++i)
            results[i] = run_instance(paths[i], config);
        return results;
    }

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= paths.size())
                return;
            try {
                results[i] = run_instance(paths[i], config);
            } catch (const std::exception& e) {
                results[i].name = std::filesystem::path(paths[i]).filename().string();
                results[i].error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back(worker);
    for (std::thread& t : pool)
        t.join();
    return results;
}

std::vector<std::string> collect_instances(const std::string& dir_or_list) {
    namespace fs = std::filesystem;
    std::vector<std::string> paths;
    if (fs::is_directory(dir_or_list)) {
        for (const fs::directory_entry& e : fs::directory_iterator(dir_or_list))
            if (e.is_regular_file() && e.path().extension() == ".cnf")
                paths.push_back(e.path().string());
        std::sort(paths.begin(), paths.end());
        return paths;
    }
    std::ifstream in(dir_or_list);
    if (!in)
        throw std::runtime_error("cannot open instance list: " + dir_or_list);
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        const std::size_t end = line.find_last_not_of(" \t\r");
        paths.push_back(line.substr(start, end - start + 1));
    }
    return paths;
}

namespace {

const char* const kCsvHeader = "instance,outcome,time_s,decisions,propagations,conflicts,"
                               "restarts,reductions,learned,deleted,deleted_fraction,"
                               "time_per_reduction_s";

void write_row(std::ostream& out, const InstanceStats& r) {
    out << r.name << ',' << to_string(r.outcome) << ',' << std::fixed << std::setprecision(6)
        << r.time_s << ',' << r.decisions << ',' << r.propagations << ',' << r.conflicts << ','
        << r.restarts << ',' << r.reductions << ',' << r.learned << ',' << r.deleted << ','
        << r.deleted_fraction << ',';
    if (r.time_per_reduction_s)
        out << *r.time_per_reduction_s;
    out << '\n';
    out.unsetf(std::ios::floatfield);
}

} // namespace

void write_stats_csv(std::ostream& out, const std::vector<InstanceStats>& stats) {
    out << kCsvHeader << '\n';
    for (const InstanceStats& r : stats)
        write_row(out, r);

    const CorpusSummary s = summarize(stats);
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t restarts = 0;
    std::uint64_t reductions = 0;
    std::uint64_t learned = 0;
    std::uint64_t deleted = 0;
    for (const InstanceStats& r : stats) {
        decisions += r.decisions;
        propagations += r.propagations;
        conflicts += r.conflicts;
        restarts += r.restarts;
        reductions += r.reductions;
        learned += r.learned;
        deleted += r.deleted;
    }
    out << "SUMMARY," << s.solved << '/' << s.instances << ',' << std::fixed
        << std::setprecision(6) << s.avg_time_solved_s << ',' << decisions << ',' << propagations
        << ',' << conflicts << ',' << restarts << ',' << reductions << ',' << learned << ','
        << deleted << ',' << s.deleted_fraction_mean << ",\n";
    out.unsetf(std::ios::floatfield);
}

std::vector<InstanceStats> read_stats_csv(std::istream& in) {
    std::vector<InstanceStats> stats;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.rfind("instance,", 0) == 0 || line.rfind("SUMMARY,", 0) == 0)
            continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream row(line);
        while (std::getline(row, cell, ','))
            cells.push_back(cell);
        cells.resize(12); // a trailing empty cell is dropped by getline
        InstanceStats r;
        r.name = cells[0];
        if (cells[1] == "SATISFIABLE")
            r.outcome = SolveOutcome::Sat;
        else if (cells[1] == "UNSATISFIABLE")
            r.outcome = SolveOutcome::Unsat;
        r.time_s = std::stod(cells[2]);
        r.decisions = std::stoull(cells[3]);
        r.propagations = std::stoull(cells[4]);
        r.conflicts = std::stoull(cells[5]);
        r.restarts = std::stoull(cells[6]);
        r.reductions = std::stoull(cells[7]);
        r.learned = std::stoull(cells[8]);
        r.deleted = std::stoull(cells[9]);
        r.deleted_fraction = std::stod(cells[10]);
        if (!cells[11].empty())
            r.time_per_reduction_s = std::stod(cells[11]);
        stats.push_back(std::move(r));
    }
    return stats;
}

void write_cactus(std::ostream& out, const std::vector<InstanceStats>& stats) {
    std::vector<double> times;
    for (const InstanceStats& r : stats)
        if (r.solved())
            times.push_back(r.time_s);
    std::sort(times.begin(), times.end());
    out << "# rank time_s\n";
    out << std::fixed << std::setprecision(6);
    for (std::size_t i = 0; i < times.size(); ++i)
        out << (i + 1) << ' ' << times[i] << '\n';
    out.unsetf(std::ios::floatfield);
}

std::size_t commonly_solved(const std::vector<InstanceStats>& a,
                            const std::vector<InstanceStats>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("cross-tab inputs cover different corpora");
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].name != b[i].name)
            throw std::invalid_argument("cross-tab inputs cover different corpora");
        if (a[i].solved() && b[i].solved())
            ++n;
    }
    return n;
}

void write_crosstab(std::ostream& out, const std::vector<StrategyResults>& results) {
    if (results.empty())
        throw std::invalid_argument("cross-tab needs at least one result set");

    out << "# pairwise commonly solved\n";
    out << "strategy";
    for (const StrategyResults& r : results)
        out << ',' << r.label;
    out << '\n';
    for (const StrategyResults& row : results) {
        out << row.label;
        for (const StrategyResults& col : results)
            out << ',' << commonly_solved(row.stats, col.stats);
        out << '\n';
    }

    // Partition instances by which subset of strategies solved them.
    out << "\n# solved patterns (one +/- per strategy, in column order)\n";
    out << "pattern,count\n";
    const std::size_t n = results.front().stats.size();
    std::vector<std::pair<std::string, std::size_t>> patterns;
    for (std::size_t i = 0; i < n; ++i) {
        std::string pat;
        for (const StrategyResults& r : results) {
            if (r.stats.size() != n || r.stats[i].name != results.front().stats[i].name)
                throw std::invalid_argument("cross-tab inputs cover different corpora");
            pat += r.stats[i].solved() ? '+' : '-';
        }
        const auto it = std::find_if(patterns.begin(), patterns.end(),
                                     [&](const auto& p) { return p.first == pat; });
        if (it == patterns.end())
            patterns.emplace_back(pat, 1);
        else
            ++it->second;
    }
    std::sort(patterns.begin(), patterns.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    for (const auto& [pat, count] : patterns)
        out << pat << ',' << count << '\n';
}

} // namespace domsat
