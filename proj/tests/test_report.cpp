#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "dsholo/errors.hpp"
#include "dsholo/report.hpp"
#include "dsholo/suites.hpp"

using dsholo::Check;
using dsholo::RunConfig;
using dsholo::VerificationReport;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

dsholo::Clock fixed_clock() {
    return []() { return std::string("2026-01-01T00:00:00Z"); };
}

VerificationReport tiny_report() {
    VerificationReport r;
    r.run_id = "unit-fixture";
    r.d = 3;
    r.nu = 1.0;
    r.R = 1.0;
    r.suite = "ortho-boundary";
    r.seed = 5;
    Check c;
    c.name = "harmonic-gram-identity";
    c.residual = 3.25e-15;
    c.tolerance = 1e-10;
    c.passed = true;
    c.metadata["n_modes"] = 9;
    c.seconds = 0.0125;
    r.checks.push_back(c);
    return r;
}

}  // namespace

TEST_CASE("report JSON serialization round-trips losslessly") {
    VerificationReport r = tiny_report();
    auto j = r.to_json();
    VerificationReport back = VerificationReport::from_json(j);
    CHECK(back.run_id == r.run_id);
    CHECK(back.d == r.d);
    CHECK(back.nu == r.nu);
    CHECK(back.suite == r.suite);
    CHECK(back.seed == r.seed);
    REQUIRE(back.checks.size() == 1);
    CHECK(back.checks[0].name == r.checks[0].name);
    CHECK(back.checks[0].residual == r.checks[0].residual);
    CHECK(back.checks[0].tolerance == r.checks[0].tolerance);
    CHECK(back.checks[0].passed == r.checks[0].passed);
    CHECK(back.checks[0].metadata == r.checks[0].metadata);
    CHECK(back.to_json() == j);
}

TEST_CASE("summary block reflects pass counts") {
    VerificationReport r = tiny_report();
    Check bad;
    bad.name = "synthetic-failure";
    bad.residual = 1.0;
    bad.tolerance = 1e-10;
    bad.passed = false;
    r.checks.push_back(bad);
    CHECK(!r.all_passed());
    auto j = r.to_json();
    CHECK(j["summary"]["n_checks"] == 2);
    CHECK(j["summary"]["n_passed"] == 1);
    CHECK(j["summary"]["all_passed"] == false);
}

TEST_CASE("suite runs are deterministic for a fixed seed") {
    RunConfig cfg;
    cfg.d = 3;
    cfg.Lmax = 2;
    cfg.seed = 9;
    cfg.suites = {"ortho-boundary", "antipodal"};
    auto r1 = dsholo::run_suite(cfg, fixed_clock());
    auto r2 = dsholo::run_suite(cfg, fixed_clock());
    CHECK(r1.run_id == "ortho-boundary+antipodal-d3-seed9-2026-01-01T00:00:00Z");
    REQUIRE(r1.checks.size() == r2.checks.size());
    for (std::size_t i = 0; i < r1.checks.size(); ++i) {
        CHECK(r1.checks[i].name == r2.checks[i].name);
        // Bitwise equality: fixed summation order and seeded sampling.
        CHECK(r1.checks[i].residual == r2.checks[i].residual);
    }
}

TEST_CASE("report files are written in both formats") {
    VerificationReport r = tiny_report();
    const std::string jpath = "test_report_out.json";
    const std::string cpath = "test_report_out.csv";
    dsholo::write_report(r, jpath, "json");
    dsholo::write_report(r, cpath, "csv");

    auto parsed = nlohmann::ordered_json::parse(slurp(jpath));
    CHECK(parsed["run_id"] == "unit-fixture");
    CHECK(parsed["checks"][0]["name"] == "harmonic-gram-identity");

    std::string csv = slurp(cpath);
    CHECK(csv.rfind("name,residual,tolerance,passed,seconds", 0) == 0);
    CHECK(csv.find("harmonic-gram-identity") != std::string::npos);

    std::remove(jpath.c_str());
    std::remove(cpath.c_str());
}

TEST_CASE("sweep CSV output is byte-identical across reruns") {
    RunConfig cfg;
    cfg.d = 3;
    cfg.sweep_kind = "kernel";
    cfg.epsilon = 0.5;
    const std::string p1 = "sweep_a.csv";
    const std::string p2 = "sweep_b.csv";
    dsholo::write_sweep_csv(dsholo::sweep_rows(cfg), p1);
    dsholo::write_sweep_csv(dsholo::sweep_rows(cfg), p2);
    std::string s1 = slurp(p1);
    CHECK(s1 == slurp(p2));
    CHECK(s1.rfind("Lmax,epsilon,residual", 0) == 0);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("filesystem failures surface as IoError") {
    CHECK_THROWS_AS(dsholo::write_report(tiny_report(), "/nonexistent-dir/x.json", "json"),
                    dsholo::IoError);
    CHECK_THROWS_AS(dsholo::write_sweep_csv({}, "/nonexistent-dir/x.csv"),
                    dsholo::IoError);
}

TEST_CASE("config gates reject invalid runs") {
    RunConfig cfg;
    cfg.nu = 0.0;
    CHECK_THROWS_AS(cfg.validate(), dsholo::ConfigError);
    try {
        cfg.validate();
    } catch (const dsholo::ConfigError& e) {
        CHECK(std::string(e.what()).find("Gamma(-2 i nu)") != std::string::npos);
    }
    RunConfig bad_d;
    bad_d.d = 5;
    CHECK_THROWS_AS(bad_d.validate(), dsholo::ConfigError);
    RunConfig bad_suite;
    bad_suite.suites = {"nope"};
    CHECK_THROWS_AS(bad_suite.validate(), dsholo::ConfigError);
    RunConfig bad_fmt;
    bad_fmt.format = "xml";
    CHECK_THROWS_AS(bad_fmt.validate(), dsholo::ConfigError);
}
