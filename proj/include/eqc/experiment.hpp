#ifndef EQC_EXPERIMENT_HPP
#define EQC_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eqc/solver.hpp"

namespace eqc {

struct ExperimentCell {
    int n = 0;
    double p = 0.0;
    int trials = 0;
};

struct ConfigSpec {
    std::string name;
    SolverConfig cfg;
};

// Batch run over seeded G(n,p) instances. Instance i of every cell uses
// seed seed_base + i, so compared configs see identical graphs.
struct ExperimentSpec {
    std::vector<ExperimentCell> cells;
    std::vector<ConfigSpec> configs;
    std::uint64_t seed_base = 1;
    double time_limit_seconds = 7200.0;
    int jobs = 1; // worker threads; results are independent of this
};

struct InstanceRecord {
    int n = 0;
    double p = 0.0;
    std::string config;
    std::uint64_t seed = 0;
    int ub = 0;
    long long nodes = 0;
    double seconds = 0.0;
    SolveStatus status = SolveStatus::Optimal;
};

// One row per (cell, config). Averages over empty sets are absent and
// render as "-" in the CSV; the common_* columns average over instances
// solved by every compared config and are only present when at least two
// configs ran.
struct IndicatorRow {
    int n = 0;
    double p = 0.0;
    std::string config;
    double pct_solved = 0.0;
    double avg_ub = 0.0;
    std::optional<double> avg_nodes;
    std::optional<double> avg_time_s;
    std::optional<double> common_avg_nodes;
    std::optional<double> common_avg_time_s;
};

struct ExperimentResult {
    std::vector<InstanceRecord> raw;  // cell-major, then config, then trial
    std::vector<IndicatorRow> rows;   // cell-major, then config
};

ExperimentResult run_experiment(const ExperimentSpec& spec);

// Column order is fixed:
// n,p,config,pct_solved,avg_ub,avg_nodes,avg_time_s,common_avg_nodes,common_avg_time_s
void write_indicator_csv(const std::vector<IndicatorRow>& rows, std::ostream& out);
// n,p,config,seed,ub,nodes,seconds,status
void write_raw_csv(const std::vector<InstanceRecord>& raw, std::ostream& out);

} // namespace eqc

#endif
