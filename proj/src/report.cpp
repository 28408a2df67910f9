#include "dsholo/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "dsholo/errors.hpp"

namespace dsholo {

using nlohmann::ordered_json;

bool VerificationReport::all_passed() const {
    for (const Check& c : checks)
        if (!c.passed) return false;
    return true;
}

ordered_json VerificationReport::to_json() const {
    ordered_json j;
    j["run_id"] = run_id;
    j["suite"] = suite;
    j["params"] = {{"d", d}, {"nu", nu}, {"R", R}};
    j["seed"] = seed;
    ordered_json arr = ordered_json::array();
    for (const Check& c : checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["residual"] = c.residual;
        cj["tolerance"] = c.tolerance;
        cj["passed"] = c.passed;
        cj["seconds"] = c.seconds;
        cj["metadata"] = c.metadata;
        arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    j["summary"] = {{"n_checks", checks.size()},
                    {"n_passed", static_cast<std::size_t>(
                                     std::count_if(checks.begin(), checks.end(),
                                                   [](const Check& c) { return c.passed; }))},
                    {"all_passed", all_passed()}};
    return j;
}

VerificationReport VerificationReport::from_json(const ordered_json& j) {
    VerificationReport r;
    r.run_id = j.at("run_id").get<std::string>();
    r.suite = j.at("suite").get<std::string>();
    r.d = j.at("params").at("d").get<int>();
    r.nu = j.at("params").at("nu").get<double>();
    r.R = j.at("params").at("R").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& cj : j.at("checks")) {
        Check c;
        c.name = cj.at("name").get<std::string>();
        c.residual = cj.at("residual").get<double>();
        c.tolerance = cj.at("tolerance").get<double>();
        c.passed = cj.at("passed").get<bool>();
        c.seconds = cj.at("seconds").get<double>();
        c.metadata = cj.at("metadata");
        r.checks.push_back(std::move(c));
    }
    return r;
}

Clock system_clock_utc() {
    return []() {
        std::time_t t = std::time(nullptr);
        std::tm tm{};
        gmtime_r(&t, &tm);
        char buf[32];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
        return std::string(buf);
    };
}

void write_report(const VerificationReport& report, const std::string& path,
                  const std::string& format) {
    std::ofstream out(path);
    if (!out) throw IoError("write_report: cannot open " + path);
    if (format == "json") {
        out << report.to_json().dump(2) << "\n";
    } else if (format == "csv") {
        out << "name,residual,tolerance,passed,seconds\n";
        char buf[160];
        for (const Check& c : report.checks) {
            std::snprintf(buf, sizeof(buf), "%.12e,%.12e,%d,%.6f", c.residual, c.tolerance,
                          c.passed ? 1 : 0, c.seconds);
            out << c.name << "," << buf << "\n";
        }
    } else {
        throw ConfigError("write_report: unknown format '" + format + "'");
    }
    if (!out.good()) throw IoError("write_report: write failed for " + path);
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("write_sweep_csv: cannot open " + path);
    out << "Lmax,epsilon,residual\n";
    char buf[96];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%d,%.12e,%.12e", r.Lmax, r.epsilon, r.residual);
        out << buf << "\n";
    }
    if (!out.good()) throw IoError("write_sweep_csv: write failed for " + path);
}

}  // namespace dsholo
