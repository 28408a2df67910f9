#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsholo/report.hpp"

namespace dsholo {

// Parsed, gate-checked run configuration.  Gates are enforced at
// construction via validate(); the CLI surfaces violations as ConfigError.
struct RunConfig {
    int d = 3;
    double nu = 1.0;
    int Lmax = 4;
    double epsilon = 0.1;
    int grid_exactness = 0;  // 0 = choose per suite
    std::uint64_t seed = 42;
    std::vector<std::string> suites;
    std::string out;
    std::string format = "json";
    std::string sweep_kind;  // "expansion" or "kernel" for sweep runs

    void validate() const;  // throws ConfigError
};

// All recognized suite names, in canonical report order:
// ortho-bulk, ortho-boundary, expansion, boundary-limit, transform-F1,
// transform-F2, antipodal.
const std::vector<std::string>& suite_names();

// Individual suites; each returns its checks (never throws on numeric
// failure: errors become failed checks with the message in metadata).
std::vector<Check> suite_ortho_bulk(const RunConfig& cfg);
std::vector<Check> suite_ortho_boundary(const RunConfig& cfg);
std::vector<Check> suite_expansion(const RunConfig& cfg);
std::vector<Check> suite_boundary_limit(const RunConfig& cfg);
std::vector<Check> suite_transform_F1(const RunConfig& cfg);
std::vector<Check> suite_transform_F2(const RunConfig& cfg);
std::vector<Check> suite_antipodal(const RunConfig& cfg);

// Run the configured suites, assemble the report (optionally writing it to
// cfg.out) with timestamps from the supplied clock.
VerificationReport run_suite(const RunConfig& cfg, const Clock& clock = system_clock_utc());

// Residual sweep rows for the expansion or kernel-convergence table.
std::vector<SweepRow> sweep_rows(const RunConfig& cfg);

// Compute rows and write the CSV to cfg.out.
void emit_residual_table(const RunConfig& cfg);

}  // namespace dsholo
