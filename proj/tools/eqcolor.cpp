#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqc/cli.hpp"

namespace {

eqc::ExperimentCell parse_cell(const std::string& text)
{
    eqc::ExperimentCell cell;
    if (std::sscanf(text.c_str(), "%d:%lf:%d", &cell.n, &cell.p, &cell.trials) != 3)
        throw CLI::ValidationError("--cell expects n:p:trials, got '" + text + "'");
    return cell;
}

// "vss:css" with an optional ":trivial" suffix, e.g. "pass:dsatur" or
// "pass:dsatur:trivial". The string itself names the config in the output.
eqc::ConfigSpec parse_config(const std::string& text, int th)
{
    eqc::ConfigSpec spec;
    spec.name = text;
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(':', pos);
        if (next == std::string::npos)
            next = text.size();
        parts.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    if (parts.size() < 2 || parts.size() > 3
        || (parts.size() == 3 && parts[2] != "trivial"))
        throw CLI::ValidationError(
            "--config expects vss:css[:trivial], got '" + text + "'");
    spec.cfg.vss = eqc::parse_vertex_strategy(parts[0]);
    spec.cfg.css = eqc::parse_color_strategy(parts[1]);
    spec.cfg.trivial_mode = parts.size() == 3;
    spec.cfg.pass_threshold = th;
    return spec;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact solver for the equitable coloring problem"};
    app.require_subcommand(1);

    std::string vss = "pass", css = "dsatur", format;
    int th = 3;
    bool trivial = false;
    double time_limit = 7200.0;

    auto add_config_flags = [&](CLI::App* cmd) {
        cmd->add_option("--vss", vss, "vertex selection strategy: dsatur|celim|pass")
            ->capture_default_str();
        cmd->add_option("--css", css,
               "color selection strategy: dsatur|bccol|order1|order2")
            ->capture_default_str();
        cmd->add_option("--th", th, "pass strategy threshold")->capture_default_str();
        cmd->add_flag("--trivial", trivial,
            "disable the equity prune (equity checked at leaves only)");
        cmd->add_option("--time-limit", time_limit, "time limit in seconds")
            ->capture_default_str();
    };

    std::string file;

    auto* solve_cmd = app.add_subcommand("solve", "solve a DIMACS instance");
    solve_cmd->add_option("file", file, "DIMACS .col file")->required();
    add_config_flags(solve_cmd);
    solve_cmd->add_option("--format", format, "json|csv");

    auto* bounds_cmd
        = app.add_subcommand("bounds", "initial bounds for a DIMACS instance");
    bounds_cmd->add_option("file", file, "DIMACS .col file")->required();
    bounds_cmd->add_option("--format", format, "json|csv");

    auto* oracle_cmd = app.add_subcommand(
        "oracle", "exhaustive ground truth for small instances (n <= 12)");
    oracle_cmd->add_option("file", file, "DIMACS .col file")->required();
    oracle_cmd->add_option("--format", format, "json|csv");

    std::vector<std::string> cell_args, config_args;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string out_path, raw_path;
    auto* exp_cmd = app.add_subcommand(
        "experiment", "batch runs over seeded random instances");
    exp_cmd->add_option("--cell", cell_args, "cell as n:p:trials (repeatable)")
        ->required();
    exp_cmd->add_option("--config", config_args,
        "config as vss:css[:trivial] (repeatable; default from --vss/--css/--trivial)");
    exp_cmd->add_option("--seed", seed, "seed base; instance i uses seed+i")
        ->capture_default_str();
    exp_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    exp_cmd->add_option("--out", out_path, "indicator CSV path (default stdout)");
    exp_cmd->add_option("--raw", raw_path, "raw per-instance log path");
    exp_cmd->add_option("--format", format, "csv|json");
    add_config_flags(exp_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            eqc::SolveOptions opt;
            opt.file = file;
            opt.cfg.vss = eqc::parse_vertex_strategy(vss);
            opt.cfg.css = eqc::parse_color_strategy(css);
            opt.cfg.pass_threshold = th;
            opt.cfg.trivial_mode = trivial;
            opt.cfg.time_limit_seconds = time_limit;
            if (!format.empty())
                opt.format = format;
            return eqc::cmd_solve(opt, std::cout, std::cerr);
        }
        if (bounds_cmd->parsed())
            return eqc::cmd_bounds(file, format.empty() ? "json" : format,
                std::cout, std::cerr);
        if (oracle_cmd->parsed())
            return eqc::cmd_oracle(file, format.empty() ? "json" : format,
                std::cout, std::cerr);
        if (exp_cmd->parsed()) {
            eqc::ExperimentOptions opt;
            for (const auto& text : cell_args)
                opt.spec.cells.push_back(parse_cell(text));
            if (config_args.empty()) {
                std::string name = vss + ":" + css + (trivial ? ":trivial" : "");
                opt.spec.configs.push_back(parse_config(name, th));
            } else {
                for (const auto& text : config_args)
                    opt.spec.configs.push_back(parse_config(text, th));
            }
            opt.spec.seed_base = seed;
            opt.spec.time_limit_seconds = time_limit;
            opt.spec.jobs = jobs;
            opt.out_path = out_path;
            opt.raw_path = raw_path;
            if (!format.empty())
                opt.format = format;
            return eqc::cmd_experiment(opt, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
