// Command-line front end: solves the policy problem, generates IRF and
// robustness CSVs, reproduces the welfare table, scans the (q, epsilon)
// grid and runs the verification suite.
//
// Exit codes: 0 ok, 1 verification failure, 2 configuration error, 3 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramsey/bifurcation.hpp"
#include "ramsey/calibration.hpp"
#include "ramsey/discretion.hpp"
#include "ramsey/io.hpp"
#include "ramsey/quasi_commitment.hpp"
#include "ramsey/simulation.hpp"
#include "ramsey/verification.hpp"
#include "ramsey/welfare.hpp"

namespace fs = std::filesystem;
using namespace ramsey;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config_path;
    std::vector<double> q_values;
    std::vector<double> q_grid;
    std::vector<double> eps_values;
    int horizon = 12;
    int periods = 200;
    double error = 0.10;
    std::string out;
    std::string format = "csv";
};

const std::vector<double> kDefaultQGrid = {0.0, 1e-7, 0.5, 1.0};
const std::vector<double> kTableQGrid = {1.0, 0.8, 0.5, 0.1, 1e-7, 0.0};
const std::vector<double> kTableEps = {3193.0, 6.0, 2.35, 1.001};
const std::vector<double> kScanQGrid = {0.0,  1e-7, 1e-6, 1e-5, 1e-4, 1e-3,
                                        1e-2, 0.1,  0.25, 0.5,  0.75, 1.0};
const std::vector<double> kScanEps = {1.001, 1.5, 2.0, 2.35, 4.0, 6.0, 10.0, 50.0, 200.0, 3193.0};

StructuralParams params_from(const Options& opt) {
    StructuralParams p = opt.config_path.empty() ? gali2015() : load_config(opt.config_path);
    if (!opt.eps_values.empty()) {
        if (opt.eps_values.size() > 1)
            throw std::domain_error("epsilon accepts a single value for this command");
        p.epsilon = opt.eps_values.front();
    }
    validate(p);
    return p;
}

std::vector<double> effective_q_list(const Options& opt, const std::vector<double>& fallback) {
    const std::vector<double>& list = !opt.q_values.empty()  ? opt.q_values
                                      : !opt.q_grid.empty()  ? opt.q_grid
                                                             : fallback;
    for (double q : list)
        if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("q must lie in [0,1]");
    return list;
}

PolicySolution solve_regime(const StructuralParams& p, double q) {
    return q == 0.0 ? solve_discretion(p) : solve_quasi_commitment(p, q);
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path.string());
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
    std::cerr << "wrote " << path.string() << '\n';
}

fs::path ensure_directory(const std::string& dir) {
    const fs::path path = dir.empty() ? fs::path(".") : fs::path(dir);
    std::error_code ec;
    fs::create_directories(path, ec);
    if (ec || !fs::is_directory(path))
        throw IoError("cannot create output directory: " + path.string());
    return path;
}

std::string q_label(double q) { return format_double(q); }

int cmd_solve(const Options& opt) {
    const StructuralParams p = params_from(opt);
    const std::vector<double> qs = effective_q_list(opt, kDefaultQGrid);

    nlohmann::ordered_json payload;
    if (qs.size() == 1) {
        payload = solution_record(solve_regime(p, qs.front()));
    } else {
        payload = nlohmann::ordered_json::array();
        for (double q : qs) payload.push_back(solution_record(solve_regime(p, q)));
    }
    const std::string text = payload.dump(2) + "\n";
    if (opt.out.empty())
        std::cout << text;
    else
        write_file(opt.out, text);
    return kExitOk;
}

int cmd_irf(const Options& opt) {
    const StructuralParams p = params_from(opt);
    const std::vector<double> qs = effective_q_list(opt, kDefaultQGrid);
    const fs::path dir = ensure_directory(opt.out);
    const bool json = opt.format == "json";

    for (double q : qs) {
        const IrfPath path = impulse_response(solve_regime(p, q), opt.horizon, p.u0);
        const fs::path file = dir / ("irf_q" + q_label(q) + (json ? ".json" : ".csv"));
        if (json) {
            write_file(file, irf_record(path).dump(2) + "\n");
        } else {
            std::ostringstream csv;
            write_irf_csv(csv, path);
            write_file(file, csv.str());
        }
    }
    return kExitOk;
}

int cmd_robustness(const Options& opt) {
    const StructuralParams p = params_from(opt);
    const std::vector<double> qs = effective_q_list(opt, kDefaultQGrid);
    const fs::path dir = ensure_directory(opt.out);
    const bool json = opt.format == "json";
    const double magnitude = std::abs(opt.error);

    for (double q : qs) {
        const PolicySolution sol = solve_regime(p, q);
        const RobustnessResult plus = robustness_experiment(sol, opt.horizon, p.u0, magnitude);
        const RobustnessResult minus =
            robustness_experiment(sol, opt.horizon, p.u0, -magnitude);

        const std::string stem = "robustness_q" + q_label(q);
        const auto emit = [&](const std::string& suffix, const IrfPath& path,
                              std::span<const double> gap) {
            const fs::path file = dir / (stem + suffix + (json ? ".json" : ".csv"));
            if (json) {
                write_file(file, irf_record(path, gap).dump(2) + "\n");
            } else {
                std::ostringstream csv;
                write_irf_csv(csv, path, gap);
                write_file(file, csv.str());
            }
        };
        emit("_baseline", plus.baseline, {});
        emit("_plus", plus.perturbed, plus.rel_gap);
        emit("_minus", minus.perturbed, minus.rel_gap);
    }
    return kExitOk;
}

void print_welfare_summary(const WelfareTable& table, const std::vector<double>& qs) {
    std::printf("%10s %9s %10s %10s", "epsilon", "kappa", "kappa/eps", "W(1)");
    for (double q : qs)
        if (q != 1.0) std::printf(" %11s", ("w(q=" + q_label(q) + ")").c_str());
    std::printf("\n");
    for (const auto& row : table.rows) {
        std::printf("%10.4g %9.4g %10.4g %10.3f", row.epsilon, row.kappa, row.weight_x,
                    row.W_commit);
        for (const auto& cell : row.entries) {
            if (cell.q == 1.0) continue;
            if (cell.ok)
                std::printf(" %10.2f%%", 100.0 * cell.w);
            else
                std::printf(" %11s", "n/a");
        }
        std::printf("\n");
    }
}

int cmd_welfare_table(const Options& opt) {
    const StructuralParams p =
        opt.config_path.empty() ? gali2015() : load_config(opt.config_path);
    validate_ignoring_epsilon(p);
    const std::vector<double> eps = opt.eps_values.empty() ? kTableEps : opt.eps_values;
    const std::vector<double> qs = effective_q_list(opt, kTableQGrid);

    const WelfareTable table = welfare_table(p, eps, qs, opt.periods);
    print_welfare_summary(table, qs);

    const bool json = opt.format == "json";
    const fs::path file =
        opt.out.empty() ? fs::path(json ? "welfare_table.json" : "welfare_table.csv")
                        : fs::path(opt.out);
    if (json) {
        write_file(file, welfare_record(table).dump(2) + "\n");
    } else {
        std::ostringstream csv;
        write_welfare_csv(csv, table);
        write_file(file, csv.str());
    }
    return kExitOk;
}

int cmd_scan(const Options& opt) {
    const StructuralParams p =
        opt.config_path.empty() ? gali2015() : load_config(opt.config_path);
    validate_ignoring_epsilon(p);
    const std::vector<double> eps = opt.eps_values.empty() ? kScanEps : opt.eps_values;
    const std::vector<double> qs = effective_q_list(opt, kScanQGrid);

    const ScanResult scan = eigenvalue_scan(p, qs, eps);
    const BoundReport bounds = bound_report(p);
    std::printf("eigenvalue bounds: lambda_min=%.4f  sup_qc=%.4f  inf_disc=%.4f  sup_disc=%.4f\n",
                bounds.lambda_min, bounds.lambda_sup_qc, bounds.lambda_inf_disc,
                bounds.lambda_sup_disc);
    std::printf("lambda decreasing in q: %s;  decreasing in eps (q>0): %s;  "
                "increasing in eps (q=0): %s\n",
                scan.lambda_decreasing_in_q ? "yes" : "NO",
                scan.lambda_decreasing_in_eps_qc ? "yes" : "NO",
                scan.lambda_increasing_in_eps_disc ? "yes" : "NO");

    const bool json = opt.format == "json";
    const fs::path file = opt.out.empty() ? fs::path(json ? "scan.json" : "scan.csv")
                                          : fs::path(opt.out);
    if (json) {
        write_file(file, scan_record(scan).dump(2) + "\n");
    } else {
        std::ostringstream csv;
        write_scan_csv(csv, scan);
        write_file(file, csv.str());
    }
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    const StructuralParams p =
        opt.config_path.empty() ? gali2015() : load_config(opt.config_path);
    const VerifyReport report = run_verification(p);
    for (const auto& claim : report.claims)
        std::printf("%s  %-40s %s\n", claim.pass ? "PASS" : "FAIL", claim.name.c_str(),
                    claim.witness.c_str());
    const std::size_t passed =
        static_cast<std::size_t>(std::count_if(report.claims.begin(), report.claims.end(),
                                               [](const Claim& c) { return c.pass; }));
    std::printf("verify: %zu/%zu claims passed\n", passed, report.claims.size());
    return report.all_pass() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey optimal monetary policy: quasi-commitment vs discretion toolkit"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&](CLI::App* cmd, bool with_grid = true) {
        cmd->add_option("--config", opt.config_path, "Flat key=value parameter file");
        cmd->add_option("--q", opt.q_values, "Credibility value(s) in [0,1]; 0 = discretion");
        if (with_grid) cmd->add_option("--q-grid", opt.q_grid, "Credibility grid in [0,1]");
        cmd->add_option("--epsilon", opt.eps_values, "Elasticity of substitution (> 1)");
        cmd->add_option("--out", opt.out, "Output file or directory");
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* solve = app.add_subcommand("solve", "Emit policy solution records as JSON");
    add_common(solve);

    auto* irf = app.add_subcommand("irf", "Write impulse-response CSVs, one file per q");
    add_common(irf);
    irf->add_option("--horizon", opt.horizon, "Quarters after impact")
        ->check(CLI::NonNegativeNumber);

    auto* robustness =
        app.add_subcommand("robustness", "Misspecified-anchor paths and relative gaps");
    add_common(robustness);
    robustness->add_option("--horizon", opt.horizon, "Quarters after impact")
        ->check(CLI::NonNegativeNumber);
    robustness->add_option("--error", opt.error, "Anchor error fraction, |error| < 1");

    auto* welfare = app.add_subcommand("welfare-table",
                                       "Relative welfare losses over (epsilon, q)");
    add_common(welfare);
    welfare->add_option("--periods", opt.periods, "Simulation length for welfare sums");

    auto* scan = app.add_subcommand("scan", "Eigenvalue/rule/anchor scan over (q, epsilon)");
    add_common(scan);

    auto* verify = app.add_subcommand("verify", "Run the invariant suite; exit 0 iff all pass");
    verify->add_option("--config", opt.config_path, "Flat key=value parameter file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (app.got_subcommand(solve)) return cmd_solve(opt);
        if (app.got_subcommand(irf)) return cmd_irf(opt);
        if (app.got_subcommand(robustness)) return cmd_robustness(opt);
        if (app.got_subcommand(welfare)) return cmd_welfare_table(opt);
        if (app.got_subcommand(scan)) return cmd_scan(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
