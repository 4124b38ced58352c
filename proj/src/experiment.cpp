#include "eqc/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "eqc/bounds.hpp"

namespace eqc {

namespace {

std::string format_metric(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    std::string s(buf);
    while (s.back() == '0')
        s.pop_back();
    if (s.back() == '.')
        s.pop_back();
    return s;
}

std::string format_p(double p)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", p);
    return buf;
}

std::string format_opt(const std::optional<double>& x)
{
    return x ? format_metric(*x) : "-";
}

} // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec)
{
    if (spec.cells.empty() || spec.configs.empty())
        throw std::invalid_argument("experiment: needs at least one cell and one config");
    for (const auto& cell : spec.cells)
        if (cell.trials < 1 || cell.n < 1)
            throw std::invalid_argument("experiment: bad cell");

    struct Task {
        std::size_t cell, config, trial;
    };
    std::vector<Task> tasks;
    for (std::size_t ci = 0; ci < spec.cells.size(); ++ci)
        for (std::size_t gi = 0; gi < spec.configs.size(); ++gi)
            for (int tr = 0; tr < spec.cells[ci].trials; ++tr)
                tasks.push_back({ci, gi, std::size_t(tr)});

    ExperimentResult result;
    result.raw.resize(tasks.size());

    auto run_task = [&](std::size_t idx) {
        const Task& task = tasks[idx];
        const ExperimentCell& cell = spec.cells[task.cell];
        const ConfigSpec& config = spec.configs[task.config];
        std::uint64_t seed = spec.seed_base + task.trial;
        Graph g = Graph::random_gnp(cell.n, cell.p, seed);
        BoundsReport bounds = compute_bounds(g);
        SolverConfig cfg = config.cfg;
        cfg.time_limit_seconds = spec.time_limit_seconds;
        SolveResult sol = solve(g, cfg, bounds);
        if (!verify_eqcol(g, sol.best_coloring))
            throw std::logic_error("experiment: reported coloring failed verification");
        InstanceRecord& rec = result.raw[idx];
        rec.n = cell.n;
        rec.p = cell.p;
        rec.config = config.name;
        rec.seed = seed;
        rec.ub = sol.ub;
        rec.nodes = sol.nodes;
        rec.seconds = sol.seconds;
        rec.status = sol.status;
    };

    int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            run_task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size() || failed.load())
                    return;
                try {
                    run_task(i);
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
        if (error)
            std::rethrow_exception(error);
    }

    // aggregate, cell-major then config, matching the raw layout
    auto record_at = [&](std::size_t ci, std::size_t gi, int tr) -> const InstanceRecord& {
        std::size_t base = 0;
        for (std::size_t c = 0; c < ci; ++c)
            base += spec.configs.size() * std::size_t(spec.cells[c].trials);
        return result.raw[base + gi * std::size_t(spec.cells[ci].trials) + tr];
    };

    for (std::size_t ci = 0; ci < spec.cells.size(); ++ci) {
        const ExperimentCell& cell = spec.cells[ci];
        // trials solved by every config ("common" averages)
        std::vector<bool> solved_by_all(cell.trials, true);
        for (std::size_t gi = 0; gi < spec.configs.size(); ++gi)
            for (int tr = 0; tr < cell.trials; ++tr)
                if (record_at(ci, gi, tr).status != SolveStatus::Optimal)
                    solved_by_all[tr] = false;

        for (std::size_t gi = 0; gi < spec.configs.size(); ++gi) {
            IndicatorRow row;
            row.n = cell.n;
            row.p = cell.p;
            row.config = spec.configs[gi].name;
            int solved = 0, common = 0;
            double ub_sum = 0, node_sum = 0, time_sum = 0;
            double cnode_sum = 0, ctime_sum = 0;
            for (int tr = 0; tr < cell.trials; ++tr) {
                const InstanceRecord& rec = record_at(ci, gi, tr);
                ub_sum += rec.ub;
                if (rec.status == SolveStatus::Optimal) {
                    ++solved;
                    node_sum += double(rec.nodes);
                    time_sum += rec.seconds;
                }
                if (solved_by_all[tr]) {
                    ++common;
                    cnode_sum += double(rec.nodes);
                    ctime_sum += rec.seconds;
                }
            }
            row.pct_solved = 100.0 * solved / cell.trials;
            row.avg_ub = ub_sum / cell.trials;
            if (solved > 0) {
                row.avg_nodes = node_sum / solved;
                row.avg_time_s = time_sum / solved;
            }
            if (spec.configs.size() >= 2 && common > 0) {
                row.common_avg_nodes = cnode_sum / common;
                row.common_avg_time_s = ctime_sum / common;
            }
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

void write_indicator_csv(const std::vector<IndicatorRow>& rows, std::ostream& out)
{
    out << "n,p,config,pct_solved,avg_ub,avg_nodes,avg_time_s,"
           "common_avg_nodes,common_avg_time_s\n";
    for (const auto& row : rows) {
        out << row.n << ',' << format_p(row.p) << ',' << row.config << ','
            << format_metric(row.pct_solved) << ',' << format_metric(row.avg_ub)
            << ',' << format_opt(row.avg_nodes) << ','
            << format_opt(row.avg_time_s) << ','
            << format_opt(row.common_avg_nodes) << ','
            << format_opt(row.common_avg_time_s) << '\n';
    }
}

void write_raw_csv(const std::vector<InstanceRecord>& raw, std::ostream& out)
{
    out << "n,p,config,seed,ub,nodes,seconds,status\n";
    for (const auto& rec : raw) {
        char sec[32];
        std::snprintf(sec, sizeof sec, "%.4f", rec.seconds);
        out << rec.n << ',' << format_p(rec.p) << ',' << rec.config << ','
            << rec.seed << ',' << rec.ub << ',' << rec.nodes << ',' << sec
            << ',' << to_string(rec.status) << '\n';
    }
}

} // namespace eqc
