// qutritlab: cloned-qutrit analysis tool.
//
// Subcommands:
//   sweep        metrics over a uniform mu grid, CSV (optionally SVG)
//   analyze      human-readable report at a single mu
//   paper-check  reproduction table of published reference values
//
// Exit codes: 0 success, 1 reproduction failure, 2 usage error.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qutritlab/analyze.hpp"
#include "qutritlab/errors.hpp"
#include "qutritlab/paper_check.hpp"
#include "qutritlab/sweep.hpp"

namespace {

int write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 2;
    }
    out << content;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qutrit cloning-machine output analysis"};
    app.require_subcommand(1);

    double mu_min = 0, mu_max = 0, mu = 0;
    int steps = 0;
    bool filtered = false, json = false;
    std::string out_path, svg_path;

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "metrics over a uniform mu grid as CSV");
    sweep_cmd->add_option("--mu-min", mu_min, "lower grid edge, in (0, 1/2)")->required();
    sweep_cmd->add_option("--mu-max", mu_max, "upper grid edge, in (mu-min, 1/2]")->required();
    sweep_cmd->add_option("--steps", steps, "number of grid points (>= 2)")->required();
    sweep_cmd->add_flag("--filtered", filtered, "include filtered-state columns");
    sweep_cmd->add_option("--svg", svg_path, "also write an SVG plot to this path");
    sweep_cmd->add_option("--out", out_path, "output path, or - for stdout")->required();

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "report for a single mu");
    analyze_cmd->add_option("--mu", mu, "machine parameter in (0, 1/2]")->required();
    analyze_cmd->add_flag("--filtered", filtered, "include the filtered-state section");

    CLI::App* check_cmd =
        app.add_subcommand("paper-check", "reproduction table of published reference values");
    check_cmd->add_flag("--json", json, "emit the table as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (sweep_cmd->parsed()) {
            const auto records = qutritlab::sweep(mu_min, mu_max, steps, filtered);
            if (!svg_path.empty()) {
                const int rc = write_output(svg_path, qutritlab::sweep_to_svg(records));
                if (rc != 0) return rc;
            }
            return write_output(out_path, qutritlab::sweep_to_csv(records));
        }
        if (analyze_cmd->parsed()) {
            std::cout << qutritlab::analyze_report(mu, filtered);
            return 0;
        }
        const auto rows = qutritlab::paper_check_rows();
        std::cout << (json ? qutritlab::paper_check_json(rows)
                           : qutritlab::paper_check_table(rows));
        return qutritlab::all_non_advisory_pass(rows) ? 0 : 1;
    } catch (const qutritlab::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
