#include "eqc/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "eqc/bounds.hpp"
#include "eqc/graph.hpp"
#include "eqc/oracle.hpp"

namespace eqc {

namespace {

using nlohmann::json;

json bounds_to_json(const BoundsReport& rep)
{
    std::vector<int> clique;
    for (int v : rep.clique)
        clique.push_back(v + 1);
    return json{{"lb_clique", rep.lb_clique}, {"lb_eq", rep.lb_eq},
        {"ub_ore", rep.ub_ore}, {"ub_naive", rep.ub_naive}, {"lb", rep.lb()},
        {"ub", rep.ub()}, {"clique", clique}, {"seconds", rep.seconds}};
}

json coloring_to_json(const Coloring& coloring)
{
    std::vector<int> out;
    out.reserve(coloring.size());
    for (int c : coloring)
        out.push_back(c + 1);
    return json(out);
}

Graph load(const std::string& file, std::ostream& err)
{
    std::string warning;
    Graph g = parse_dimacs_file(file, &warning);
    if (!warning.empty())
        err << "warning: " << file << ": " << warning << '\n';
    return g;
}

} // namespace

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err)
{
    try {
        Graph g = load(opt.file, err);
        BoundsReport bounds = compute_bounds(g);
        SolveResult res = solve(g, opt.cfg, bounds);
        if (opt.format == "csv") {
            out << "file,ub,status,nodes,seconds,lb_used\n"
                << opt.file << ',' << res.ub << ',' << to_string(res.status)
                << ',' << res.nodes << ',' << res.seconds << ',' << res.lb_used
                << '\n';
        } else {
            json doc{{"file", opt.file}, {"bounds", bounds_to_json(bounds)},
                {"result",
                    json{{"ub", res.ub}, {"status", to_string(res.status)},
                        {"nodes", res.nodes}, {"seconds", res.seconds},
                        {"lb_used", res.lb_used},
                        {"time_check_interval_nodes", time_check_interval_nodes},
                        {"colors", coloring_to_json(res.best_coloring)}}}};
            out << doc.dump(2) << '\n';
        }
        return res.status == SolveStatus::Optimal ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int cmd_bounds(const std::string& file, const std::string& format,
    std::ostream& out, std::ostream& err)
{
    try {
        Graph g = load(file, err);
        BoundsReport rep = compute_bounds(g);
        if (format == "csv") {
            out << "file,lb_clique,lb_eq,ub_ore,ub_naive,lb,ub,seconds\n"
                << file << ',' << rep.lb_clique << ',' << rep.lb_eq << ','
                << rep.ub_ore << ',' << rep.ub_naive << ',' << rep.lb() << ','
                << rep.ub() << ',' << rep.seconds << '\n';
        } else {
            out << bounds_to_json(rep).dump(2) << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int cmd_oracle(const std::string& file, const std::string& format,
    std::ostream& out, std::ostream& err)
{
    try {
        Graph g = load(file, err);
        OracleResult res = brute_chi_eq(g);
        if (format == "csv") {
            out << "file,chi_eq\n" << file << ',' << res.chi_eq << '\n';
        } else {
            json doc{{"chi_eq", res.chi_eq},
                {"colors", coloring_to_json(res.witness)}};
            out << doc.dump(2) << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int cmd_experiment(const ExperimentOptions& opt, std::ostream& out,
    std::ostream& err)
{
    try {
        ExperimentResult result = run_experiment(opt.spec);

        std::string raw_path = opt.raw_path;
        if (raw_path.empty())
            raw_path = opt.out_path.empty() ? "experiment.raw.csv"
                                            : opt.out_path + ".raw.csv";
        std::ofstream raw(raw_path);
        if (!raw)
            throw std::runtime_error("cannot write " + raw_path);
        write_raw_csv(result.raw, raw);

        if (opt.format == "json") {
            json rows = json::array();
            for (const auto& row : result.rows) {
                json j{{"n", row.n}, {"p", row.p}, {"config", row.config},
                    {"pct_solved", row.pct_solved}, {"avg_ub", row.avg_ub}};
                auto put = [&](const char* key, const std::optional<double>& v) {
                    if (v)
                        j[key] = *v;
                    else
                        j[key] = nullptr;
                };
                put("avg_nodes", row.avg_nodes);
                put("avg_time_s", row.avg_time_s);
                put("common_avg_nodes", row.common_avg_nodes);
                put("common_avg_time_s", row.common_avg_time_s);
                rows.push_back(std::move(j));
            }
            std::string text = rows.dump(2) + "\n";
            if (opt.out_path.empty()) {
                out << text;
            } else {
                std::ofstream f(opt.out_path);
                if (!f)
                    throw std::runtime_error("cannot write " + opt.out_path);
                f << text;
            }
        } else {
            std::ostringstream csv;
            write_indicator_csv(result.rows, csv);
            if (opt.out_path.empty()) {
                out << csv.str();
            } else {
                std::ofstream f(opt.out_path);
                if (!f)
                    throw std::runtime_error("cannot write " + opt.out_path);
                f << csv.str();
            }
        }
        err << "raw per-instance log: " << raw_path << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace eqc
