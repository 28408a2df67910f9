#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "approx.hpp"
#include "dsholo/defaults.hpp"
#include "dsholo/extrapolation.hpp"

using dsholo::Complex;
using dsholo::boundary_exponent_ladder;
using dsholo::richardson_extrapolate;
using testutil::check_close;

namespace {

std::vector<double> geometric_nodes(double first, double ratio_log2, int count) {
    std::vector<double> v(count);
    for (int k = 0; k < count; ++k)
        v[k] = first * std::pow(2.0, -ratio_log2 * k);
    return v;
}

}  // namespace

TEST_CASE("integer-exponent model is recovered exactly") {
    const Complex A{2.3, -1.1};
    const Complex c[] = {{0.7, 0.1}, {-1.4, 0.6}, {0.9, -2.0}, {3.1, 0.0}};
    std::vector<double> nodes = geometric_nodes(0.2, 0.5, 6);
    std::vector<Complex> exps = {{1, 0}, {2, 0}, {3, 0}, {4, 0}};

    SUBCASE("all four error terms present") {
        std::vector<Complex> vals;
        for (double h : nodes) {
            Complex v = A;
            for (int jj = 0; jj < 4; ++jj) v += c[jj] * std::pow(h, jj + 1);
            vals.push_back(v);
        }
        auto r = richardson_extrapolate(vals, nodes, exps);
        check_close(r.value, A, 1e-12);
        CHECK(r.order == 4);
        // stabilization reports the size of the final correction — here the
        // amplified h^4 term at the smallest node, small but nonzero.
        CHECK(r.stabilization > 1e-8);
        CHECK(r.stabilization < 1e-3);
    }

    SUBCASE("model exhausted before the ladder runs out") {
        std::vector<Complex> vals;
        for (double h : nodes) {
            Complex v = A;
            for (int jj = 0; jj < 2; ++jj) v += c[jj] * std::pow(h, jj + 1);
            vals.push_back(v);
        }
        auto r = richardson_extrapolate(vals, nodes, exps);
        check_close(r.value, A, 1e-13);
        CHECK(r.order == 4);
        // Stages beyond the model act on a constant column, so the final
        // correction collapses to rounding noise.
        CHECK(r.stabilization < 1e-12);
    }
}

TEST_CASE("oscillatory complex exponents are eliminated exactly") {
    // Error terms h^(-2 i nu) have unit modulus; elimination is algebraic and
    // does not rely on decay.
    const Complex A{-0.4, 0.9};
    std::vector<Complex> exps = boundary_exponent_ladder(1.0, 3);
    const Complex c[] = {{0.05, -0.02}, {0.6, 0.3}, {-0.2, 0.15}};
    std::vector<double> nodes = geometric_nodes(0.4, 1.0 / 3.0, 7);
    std::vector<Complex> vals;
    for (double h : nodes) {
        Complex v = A;
        for (int jj = 0; jj < 3; ++jj)
            v += c[jj] * std::exp(exps[jj] * std::log(Complex{h, 0.0}));
        vals.push_back(v);
    }
    auto r = richardson_extrapolate(vals, nodes, exps);
    check_close(r.value, A, 1e-11);
    CHECK(r.order == 3);
}

TEST_CASE("stage count is capped by the node count") {
    std::vector<double> nodes = geometric_nodes(0.1, 1.0, 3);
    std::vector<Complex> vals = {{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}};
    std::vector<Complex> exps = {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}};
    auto r = richardson_extrapolate(vals, nodes, exps);
    CHECK(r.order == 2);
    check_close(r.value, {1.0, 0.0}, 1e-14);
}

TEST_CASE("boundary exponent ladder alternates the oscillatory family") {
    auto lad = boundary_exponent_ladder(1.0, 13);
    REQUIRE(lad.size() == 13);
    // {-2 i nu, 1, 1 - 2 i nu, 2, 2 - 2 i nu, ...}
    for (int m = 0; m < 6; ++m) {
        check_close(lad[2 * m], {static_cast<double>(m), -2.0}, 1e-15);
        check_close(lad[2 * m + 1], {static_cast<double>(m + 1), 0.0}, 1e-15);
    }
    check_close(lad[12], {6.0, -2.0}, 1e-15);
}

TEST_CASE("frozen delta and eps sequences have the documented shape") {
    auto deltas = dsholo::defaults::boundary_delta_sequence();
    REQUIRE(deltas.size() == 14);
    check_close(deltas[0], 0.4, 1e-15);
    check_close(deltas[3], 0.2, 1e-15);  // ratio 2 every three steps
    CHECK(deltas.back() > 0.019);
    CHECK(deltas.back() < 0.020);

    auto eps = dsholo::defaults::kernel_eps_sequence();
    REQUIRE(eps.size() == 9);
    check_close(eps[0], 0.2, 1e-15);
    check_close(eps[2], 0.1, 1e-15);  // ratio 2 every two steps
    check_close(eps[8], 0.0125, 1e-15);
}
