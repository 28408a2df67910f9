#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsholo/errors.hpp"
#include "dsholo/report.hpp"
#include "dsholo/suites.hpp"

namespace {

void add_common_options(CLI::App* app, dsholo::RunConfig& cfg) {
    app->add_option("--d", cfg.d, "Spacetime dimension (3 or 4)");
    app->add_option("--nu", cfg.nu, "Principal-series parameter nu");
    app->add_option("--Lmax", cfg.Lmax, "Maximum total degree L");
    app->add_option("--epsilon", cfg.epsilon, "Regularization shift epsilon");
    app->add_option("--grid-exactness", cfg.grid_exactness,
                    "Sphere-grid polynomial exactness (0 = per-suite default)");
    app->add_option("--seed", cfg.seed, "Seed for sampled points");
    app->add_option("--out", cfg.out, "Output path for the report / table");
    app->add_option("--format", cfg.format, "Report format: json or csv");
}

void log_checks(const dsholo::VerificationReport& report) {
    const char* flag = std::getenv("DSHOLO_LOG");
    if (flag == nullptr || std::string(flag).empty()) return;
    for (const dsholo::Check& c : report.checks) {
        std::fprintf(stderr, "[%s] %-28s residual %.3e  tol %.1e  (%.2fs)\n",
                     c.passed ? "ok" : "FAIL", c.name.c_str(), c.residual,
                     c.tolerance, c.seconds);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dsholo: mode functions of dS_d and their boundary correspondence"};
    app.require_subcommand(1);

    dsholo::RunConfig cfg;
    std::vector<std::string> suite_args;
    std::string sweep_kind;

    CLI::App* verify = app.add_subcommand(
        "verify", "Run verification suites and report pass/fail per identity");
    verify->add_option("suite", suite_args,
                       "Suites to run (ortho-bulk, ortho-boundary, expansion, "
                       "boundary-limit, transform-F1, transform-F2, antipodal, all)")
        ->required();
    add_common_options(verify, cfg);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Emit a residual table over (Lmax, epsilon) as CSV");
    sweep->add_option("kind", sweep_kind, "Sweep kind: expansion or kernel")->required();
    add_common_options(sweep, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            cfg.suites = suite_args;
            dsholo::VerificationReport report = dsholo::run_suite(cfg);
            log_checks(report);
            int n_failed = 0;
            for (const dsholo::Check& c : report.checks)
                if (!c.passed) ++n_failed;
            if (cfg.out.empty())
                std::printf("%s\n", report.to_json().dump(2).c_str());
            std::printf("%s: %zu checks, %d failed\n",
                        report.all_passed() ? "PASS" : "FAIL",
                        report.checks.size(), n_failed);
            return report.all_passed() ? 0 : 1;
        }
        cfg.sweep_kind = sweep_kind;
        if (cfg.out.empty()) {
            for (const dsholo::SweepRow& row : dsholo::sweep_rows(cfg))
                std::printf("%d,%.12e,%.12e\n", row.Lmax, row.epsilon, row.residual);
        } else {
            dsholo::emit_residual_table(cfg);
        }
        return 0;
    } catch (const dsholo::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const dsholo::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 3;
    } catch (const dsholo::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
