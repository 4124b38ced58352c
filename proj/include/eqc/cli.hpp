#ifndef EQC_CLI_HPP
#define EQC_CLI_HPP

#include <iosfwd>
#include <string>

#include "eqc/experiment.hpp"
#include "eqc/solver.hpp"

namespace eqc {

// Command implementations behind the eqcolor binary. They write results to
// `out` and diagnostics to `err`, and return the process exit code:
// 0 optimal / success, 2 time limit reached, 1 error.

struct SolveOptions {
    std::string file;
    SolverConfig cfg;
    std::string format = "json"; // json|csv
};

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);

int cmd_bounds(const std::string& file, const std::string& format,
    std::ostream& out, std::ostream& err);

int cmd_oracle(const std::string& file, const std::string& format,
    std::ostream& out, std::ostream& err);

struct ExperimentOptions {
    ExperimentSpec spec;
    std::string out_path;  // indicator table; empty writes to `out`
    std::string raw_path;  // per-instance log; empty derives from out_path
    std::string format = "csv"; // csv|json
};

int cmd_experiment(const ExperimentOptions& opt, std::ostream& out,
    std::ostream& err);

} // namespace eqc

#endif
