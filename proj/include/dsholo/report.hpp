#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dsholo {

// One verified identity: residual against tolerance plus free-form metadata
// (grid sizes, extrapolation order, sample counts, ...).
struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
    double seconds = 0.0;
};

struct VerificationReport {
    std::string run_id;
    int d = 0;
    double nu = 0.0;
    double R = 1.0;
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool all_passed() const;
    nlohmann::ordered_json to_json() const;
    static VerificationReport from_json(const nlohmann::ordered_json& j);
};

// Wall-clock supplier, injectable so report golden tests are reproducible.
using Clock = std::function<std::string()>;

// UTC timestamp "YYYY-MM-DDTHH:MM:SSZ".
Clock system_clock_utc();

// Write serialized JSON (2-space indent, trailing newline) or the checks as
// CSV rows.  Throws IoError on filesystem failure.
void write_report(const VerificationReport& report, const std::string& path,
                  const std::string& format);

// One row of a residual sweep table.
struct SweepRow {
    int Lmax = 0;
    double epsilon = 0.0;
    double residual = 0.0;
};

// CSV with header "Lmax,epsilon,residual", fixed %.12e formatting so reruns
// are byte-identical.  Throws IoError on filesystem failure.
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);

}  // namespace dsholo
