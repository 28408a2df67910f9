#include <cmath>
#include <complex>
#include <tuple>
#include <vector>

#include <doctest.h>

#include "approx.hpp"
#include "dsholo/errors.hpp"
#include "dsholo/geometry.hpp"
#include "dsholo/harmonics.hpp"
#include "dsholo/modes.hpp"

using dsholo::BulkPoint;
using dsholo::Complex;
using dsholo::NullDirection;
using dsholo::PrincipalParams;
using dsholo::boundary_factors;
using dsholo::expansion_residual;
using dsholo::kg_normalization;
using dsholo::mode_radial;
using dsholo::mode_radial_drho;
using dsholo::plane_wave;
using testutil::check_close;

namespace {

constexpr double kPi = 3.14159265358979323846;
const PrincipalParams kD3Nu1{3, 1.0};

// Pair of unit directions with prescribed inner product t.
struct DirPair {
    std::vector<double> u{0.0, 0.0, 1.0};
    std::vector<double> v;
    explicit DirPair(double t) : v{std::sqrt(1.0 - t * t), 0.0, t} {}
};

}  // namespace

TEST_CASE("plane wave matches frozen reference value") {
    DirPair dirs(0.466636084983398);
    BulkPoint p{0.3, 1e-3, dirs.u};
    NullDirection xi{1.7, dirs.v};
    check_close(plane_wave(p, xi, kD3Nu1),
                {-0.053843045978812394, -0.13211710455330365}, 1e-11);
}

TEST_CASE("plane wave is homogeneous of degree tau in xi") {
    DirPair dirs(-0.37);
    BulkPoint p{-0.6, 0.05, dirs.u};
    Complex ratio = plane_wave(p, {2.6, dirs.v}, kD3Nu1) /
                    plane_wave(p, {1.3, dirs.v}, kD3Nu1);
    check_close(ratio, std::pow(Complex{2.0, 0.0}, kD3Nu1.tau()), 1e-12);
}

TEST_CASE("plane wave refuses the branch cut at eps = 0") {
    // rho = 0, eps = 0, u.v > 0 puts x.xi on the negative real axis.
    DirPair dirs(0.5);
    CHECK_THROWS_AS(plane_wave(BulkPoint{0.0, 0.0, dirs.u}, {1.0, dirs.v}, kD3Nu1),
                    dsholo::BranchCutError);
}

TEST_CASE("radial factor matches frozen reference values") {
    check_close(mode_radial(kD3Nu1, 1, 0.2, 0.01),
                {-0.36846283527975283, -0.16417702076178838}, 1e-11);
    check_close(mode_radial(kD3Nu1, 2, -0.35, 0.02),
                {0.25177656384636975, 0.1839173480161431}, 1e-11);
    check_close(mode_radial_drho(kD3Nu1, 2, -0.35, 0.02),
                {0.55714648708843999, -0.6499862568778225}, 1e-11);
    // Waist values are purely imaginary / real for d = 3, nu = 1, L = 0.
    check_close(mode_radial(kD3Nu1, 0, 0.0, 0.0), {0.0, 0.53980874099905184}, 1e-12);
    check_close(mode_radial_drho(kD3Nu1, 0, 0.0, 0.0), {0.58857042609646073, 0.0},
                1e-12);
    // Near the past boundary the hypergeometric argument approaches the unit
    // circle close to 1 (slow-series path).
    check_close(mode_radial(kD3Nu1, 1, -kPi / 2 + 0.1, 0.01),
                {0.015477261782529808, 0.049599711355669845}, 1e-9);
}

TEST_CASE("analytic rho-derivative agrees with finite differences") {
    const double h = 0.01;
    for (auto [L, rho, eps] :
         {std::tuple{2, 0.31, 0.15}, std::tuple{0, -0.8, 0.05}}) {
        auto f = [&](double r) { return mode_radial(kD3Nu1, L, r, eps); };
        Complex fd = (-f(rho + 2 * h) + 8.0 * f(rho + h) - 8.0 * f(rho - h) +
                      f(rho - 2 * h)) /
                     (12.0 * h);
        check_close(mode_radial_drho(kD3Nu1, L, rho, eps), fd, 1e-6);
    }
}

TEST_CASE("radial factor solves the conformal-time field equation") {
    // f'' + (d-2) tan(rho) f' + [L(L+d-2) + q / cos^2(rho)] f = 0 with
    // q = ((d-1)/2)^2 + nu^2; f'' from a five-point stencil on the analytic
    // first derivative.
    const double h = 0.005;
    auto check_ode = [&](const PrincipalParams& params, int L, double rho) {
        auto f1 = [&](double r) { return mode_radial_drho(params, L, r, 0.0); };
        Complex f2 = (-f1(rho + 2 * h) + 8.0 * f1(rho + h) - 8.0 * f1(rho - h) +
                      f1(rho - 2 * h)) /
                     (12.0 * h);
        Complex f0 = mode_radial(params, L, rho, 0.0);
        Complex d1 = f1(rho);
        double q = dsholo::casimir_eigenvalue(params);
        double cl = L * (L + params.d - 2) + q / (std::cos(rho) * std::cos(rho));
        Complex resid = f2 + (params.d - 2) * std::tan(rho) * d1 + cl * f0;
        double scale = std::abs(f2) + std::abs((params.d - 2) * std::tan(rho) * d1) +
                       std::abs(cl * f0);
        INFO("L = " << L << " rho = " << rho);
        CHECK(std::abs(resid) / scale < 1e-5);
    };
    check_ode(kD3Nu1, 0, 0.4);
    check_ode(kD3Nu1, 2, -0.7);
    check_ode(kD3Nu1, 4, 0.9);
    check_ode({4, 1.0}, 1, 0.5);
}

TEST_CASE("expansion residual matches frozen truncation magnitudes") {
    // The residual depends on the directions only through u.v.
    struct Row {
        double rho, t, eps, res5, res20;
    };
    const Row rows[] = {
        {-0.423, -0.691, 0.1, 0.35528776339424292, 0.079053844446943567},
        {0.362, -0.847, 0.1, 0.49547092966816786, 0.026009467088744115},
        {-0.423, -0.691, 0.5, 0.036000809824419705, 2.7503175374900237e-5},
        {0.362, -0.847, 0.5, 0.067633228599804914, 8.6646742698177815e-6},
    };
    for (const Row& r : rows) {
        DirPair dirs(r.t);
        BulkPoint p{r.rho, r.eps, dirs.u};
        NullDirection xi{1.0, dirs.v};
        check_close(expansion_residual(p, xi, kD3Nu1, 5), r.res5, 2e-3);
        check_close(expansion_residual(p, xi, kD3Nu1, 20), r.res20, 2e-3);
    }
}

TEST_CASE("expansion residual decreases geometrically in the truncation") {
    DirPair dirs(-0.691);
    BulkPoint p{-0.423, 0.5, dirs.u};
    NullDirection xi{1.0, dirs.v};
    double prev = 1e300;
    for (int Lmax : {5, 10, 20, 30}) {
        double res = expansion_residual(p, xi, kD3Nu1, Lmax);
        CHECK(res < prev);
        prev = res;
    }
    check_close(prev, 2.3212898406556401e-7, 2e-3);
}

TEST_CASE("boundary factors match frozen reference values") {
    auto f = boundary_factors(kD3Nu1, 2, 0.0, 0.0);
    check_close(f.F_s, {0.13565336304019852, -0.0053991086937782916}, 1e-12);
    check_close(f.F_p, {-0.31837479421570221, -0.94796492045228618}, 1e-12);
    check_close(f.F_r, {1.6878876815464043, -12.946147252038269}, 1e-12);
    // The degree-dependent factor is a pure phase.
    for (int L = 0; L <= 5; ++L) {
        auto g = boundary_factors(kD3Nu1, L, 0.1, 0.01);
        check_close(std::abs(g.F_p), 1.0, 1e-13);
    }
}

TEST_CASE("KG normalization constant matches frozen reference values") {
    check_close(kg_normalization({3, 0.5}), 0.82087122543863609, 1e-13);
    check_close(kg_normalization({3, 1.0}), 1.5737351871317389, 1e-13);
    check_close(kg_normalization({3, 2.0}), 3.1416036094371268, 1e-13);
    check_close(kg_normalization({4, 1.0}), 0.97991776394086747, 1e-13);
    // Closed form 2^(1-d) e^(pi nu) |Gamma((d-1)/2 + i nu)|^2.
    double want = 0.25 * std::exp(kPi) * std::norm(dsholo::complex_gamma({1.0, 1.0}));
    check_close(kg_normalization(kD3Nu1), want, 1e-13);
}

TEST_CASE("boundary modes evaluate the harmonic at the sphere point") {
    dsholo::HarmonicIndex idx{2, {1}};
    std::vector<double> u{0.48, -0.6, 0.6414046650213331};
    double n = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    for (double& c : u) c /= n;
    Complex y = dsholo::hyperspherical_Y(3, idx, u);
    check_close(dsholo::boundary_mode_eval({kD3Nu1, idx, dsholo::BoundarySide::future},
                                           dsholo::BoundaryPoint{u}),
                y, 1e-14);
    check_close(dsholo::boundary_mode_eval({kD3Nu1, idx, dsholo::BoundarySide::past},
                                           dsholo::BoundaryPoint{u}),
                y, 1e-14);
}
