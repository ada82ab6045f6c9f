#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trac/classical.hpp"
#include "trac/errors.hpp"
#include "trac/rac.hpp"
#include "trac/report.hpp"
#include "trac/seesaw.hpp"
#include "trac/strategy_io.hpp"

namespace {

void print_line(const char* name, double value) {
    std::printf("%s %.6f\n", name, value);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw trac::ValidationError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw trac::ValidationError("failed writing '" + path + "'");
}

void run_evaluate(const std::string& path) {
    const trac::TemporalStrategy strategy = trac::read_strategy_file(path);
    const trac::CorrelationTable table = trac::correlation_table(strategy);
    std::printf("n %d\n", strategy.n);
    for (int i = 0; i < (1 << (strategy.n - 1)); ++i)
        for (int j = 0; j < strategy.n; ++j)
            std::printf("C %d %d %.6f\n", i + 1, j + 1, table.c(i, j));
    const double k = trac::evaluate_K(strategy);
    print_line("K", k);
    print_line("F", trac::success_probability(trac::temporal_to_rac(strategy)));
}

void run_optimize(int n, int restarts, std::optional<std::uint64_t> seed,
                  const std::string& out_path, const std::string& csv_path) {
    trac::OptimizerConfig config;
    config.n = n;
    config.restarts = restarts;
    config.seed = seed ? *seed : trac::default_seed_from_env();
    const trac::OptimumReport report = trac::seesaw_maximize(config);
    print_line("best_K", report.best_k);
    print_line("F", trac::f_from_k(n, report.best_k));
    std::printf("restart_index %d\n", report.restart_index);
    std::printf("sweeps_used %d\n", report.sweeps_used);
    if (!out_path.empty()) trac::write_strategy_file(out_path, report.strategy);
    if (!csv_path.empty()) write_text_file(csv_path, trac::restarts_csv(report));
}

void run_classical_bound(int n) {
    const trac::ClassicalKBound kb = trac::max_K_deterministic(n);
    print_line("K_max", kb.k);
    if (n <= 4) {
        print_line("F_max", trac::max_F_deterministic(n).f);
    } else {
        // exhaustive search over 2^(2^n) encodings is out of reach here
        print_line("F_majority_lower_bound", trac::majority_F_lower_bound(n).f);
    }
}

void run_certify(int n, double k_min, double k_max, int steps, bool no_arrow, bool geq_k,
                 bool conditional, const std::string& out_path, const std::string& fit_path) {
    if (conditional && geq_k)
        throw trac::ValidationError("--conditional only supports the K equality form");
    trac::SweepReport report;
    if (conditional) {
        report.n = n;
        for (int s = 0; s < steps; ++s) {
            const double k = steps < 2 ? k_min : k_min + (k_max - k_min) * s / (steps - 1);
            report.points.push_back(trac::certify_conditional(n, k, !no_arrow));
        }
        const std::string csv = trac::sweep_csv(report);
        if (!out_path.empty()) write_text_file(out_path, csv);
        std::fputs(csv.c_str(), stdout);
        return;
    }
    report = trac::sweep_and_fit(n, k_min, k_max, steps, !no_arrow, geq_k);
    const std::string csv = trac::sweep_csv(report);
    if (!out_path.empty()) write_text_file(out_path, csv);
    std::fputs(csv.c_str(), stdout);
    std::fputs(trac::fit_text(report).c_str(), stderr);
    if (!fit_path.empty()) write_text_file(fit_path, trac::fit_csv(report));
}

void run_audit(int n, const std::string& csv_path) {
    const trac::AuditReport report = trac::audit_bounds(n);
    std::fputs(report.to_text().c_str(), stdout);
    if (!csv_path.empty()) write_text_file(csv_path, report.to_csv());
}

void run_plot(const std::string& csv_path, const std::string& out_path, const std::string& x_col,
              const std::string& y_col) {
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) throw trac::ValidationError("cannot open CSV file '" + csv_path + "'");

    auto split = [](const std::string& line) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream row(line);
        while (std::getline(row, field, ',')) fields.push_back(field);
        return fields;
    };

    std::string line;
    if (!std::getline(in, line)) throw trac::ValidationError(csv_path + ": empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split(line);
    int xi = -1, yi = -1;
    for (size_t c = 0; c < header.size(); ++c) {
        if (header[c] == x_col) xi = static_cast<int>(c);
        if (header[c] == y_col) yi = static_cast<int>(c);
    }
    if (xi < 0) throw trac::ValidationError(csv_path + ": no column named '" + x_col + "'");
    if (yi < 0) throw trac::ValidationError(csv_path + ": no column named '" + y_col + "'");

    trac::CurveData curve;
    curve.x_label = x_col;
    curve.y_label = y_col;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> fields = split(line);
        if (fields.size() != header.size()) {
            throw trac::ValidationError(csv_path + " line " + std::to_string(line_no) +
                                        ": expected " + std::to_string(header.size()) +
                                        " fields");
        }
        try {
            curve.points.emplace_back(std::stod(fields[xi]), std::stod(fields[yi]));
        } catch (const std::exception&) {
            throw trac::ValidationError(csv_path + " line " + std::to_string(line_no) +
                                        ": non-numeric value");
        }
    }
    if (curve.points.empty()) throw trac::ValidationError(csv_path + ": no data rows");
    write_text_file(out_path, trac::render_svg(curve));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"temporal correlation inequalities and random access codes workbench"};
    app.require_subcommand(1);

    auto* evaluate = app.add_subcommand("evaluate", "score a strategy file");
    std::string eval_path;
    evaluate->add_option("file", eval_path, "strategy file")->required();

    auto* optimize = app.add_subcommand("optimize", "seesaw search for the best strategy");
    int opt_n = 2, opt_restarts = 100;
    std::optional<std::uint64_t> opt_seed;
    std::string opt_out, opt_csv;
    optimize->add_option("--n", opt_n, "scenario size")->required();
    optimize->add_option("--restarts", opt_restarts, "random restarts (default 100)");
    optimize->add_option("--seed", opt_seed, "RNG seed (default: TEMPORAL_RAC_SEED or 0)");
    optimize->add_option("--out", opt_out, "write the best strategy to this file");
    optimize->add_option("--restarts-csv", opt_csv, "write per-restart outcomes to this CSV");

    auto* classical = app.add_subcommand("classical-bound", "deterministic-strategy maxima");
    int cls_n = 2;
    classical->add_option("--n", cls_n, "scenario size")->required();

    auto* certify = app.add_subcommand("certify", "LP guessing-probability sweep over K");
    int crt_n = 2, crt_steps = 2;
    double crt_min = 0.0, crt_max = 0.0;
    bool crt_no_arrow = false, crt_geq = false, crt_conditional = false;
    std::string crt_out, crt_fit;
    certify->add_option("--n", crt_n, "scenario size")->required();
    certify->add_option("--k-min", crt_min, "sweep start")->required();
    certify->add_option("--k-max", crt_max, "sweep end")->required();
    certify->add_option("--steps", crt_steps, "grid points")->required();
    certify->add_flag("--no-arrow-constraints", crt_no_arrow,
                      "drop the earlier-marginal equalities");
    certify->add_flag("--geq-k", crt_geq, "constrain K >= k instead of K = k");
    certify->add_flag("--conditional", crt_conditional,
                      "certify the later outcome given the earlier one");
    certify->add_option("--out", crt_out, "also write the sweep CSV here");
    certify->add_option("--fit-csv", crt_fit, "write the fit summary CSV here");

    auto* audit = app.add_subcommand("audit", "compare claimed and enumerated classical bounds");
    int aud_n = 2;
    std::string aud_csv;
    audit->add_option("--n", aud_n, "scenario size")->required();
    audit->add_option("--csv", aud_csv, "write the report as CSV here");

    auto* plot = app.add_subcommand("plot", "render a sweep CSV as an SVG polyline");
    std::string plot_csv, plot_out, plot_x = "k", plot_y = "min_entropy";
    plot->add_option("csv", plot_csv, "input CSV")->required();
    plot->add_option("--out", plot_out, "output SVG path")->required();
    plot->add_option("--x", plot_x, "x column (default k)");
    plot->add_option("--y", plot_y, "y column (default min_entropy)");

    try {
        app.parse(argc, argv);
        if (*evaluate) run_evaluate(eval_path);
        if (*optimize) run_optimize(opt_n, opt_restarts, opt_seed, opt_out, opt_csv);
        if (*classical) run_classical_bound(cls_n);
        if (*certify)
            run_certify(crt_n, crt_min, crt_max, crt_steps, crt_no_arrow, crt_geq,
                        crt_conditional, crt_out, crt_fit);
        if (*audit) run_audit(aud_n, aud_csv);
        if (*plot) run_plot(plot_csv, plot_out, plot_x, plot_y);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const trac::SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 2;
    } catch (const trac::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
