#include <cmath>
#include <vector>

#include <doctest.h>

#include "approx.hpp"
#include "dsholo/errors.hpp"
#include "dsholo/sphere_grid.hpp"

using dsholo::SphereGrid;
using dsholo::build_sphere_grid;
using testutil::check_close;

namespace {

constexpr double kPi = 3.14159265358979323846;

double integrate_monomial(const SphereGrid& g, const std::vector<int>& powers) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double* u = g.node(i);
        double term = g.weights[i];
        for (int c = 0; c < g.d; ++c)
            for (int k = 0; k < powers[c]; ++k) term *= u[c];
        s += term;
    }
    return s;
}

// Exact integral of prod u_c^(alpha_c) over S^(d-1):
//   2 prod Gamma((alpha_c+1)/2) / Gamma(sum (alpha_c+1)/2), all alpha even.
double monomial_exact(const std::vector<int>& powers) {
    double num = 2.0, btot = 0.0;
    for (int a : powers) {
        double b = 0.5 * (a + 1);
        num *= std::tgamma(b);
        btot += b;
    }
    return num / std::tgamma(btot);
}

}  // namespace

TEST_CASE("five-point Gauss-Legendre rule matches frozen reference values") {
    std::vector<double> x, w;
    dsholo::detail::gauss_legendre(5, x, w);
    const double xs[] = {-0.90617984593866396, -0.53846931010568311, 0.0,
                         0.53846931010568311, 0.90617984593866396};
    const double ws[] = {0.23692688505618942, 0.47862867049936619, 0.568888888888889,
                         0.47862867049936619, 0.23692688505618942};
    REQUIRE(x.size() == 5);
    for (int i = 0; i < 5; ++i) {
        check_close(x[i], xs[i], 1e-14, 1e-14);
        check_close(w[i], ws[i], 1e-14);
    }
}

TEST_CASE("Gauss-Chebyshev second-kind rule has the closed-form nodes") {
    std::vector<double> x, w;
    dsholo::detail::gauss_chebyshev2(7, x, w);
    REQUIRE(x.size() == 7);
    for (int k = 0; k < 7; ++k) {
        double ang = (k + 1) * kPi / 8.0;
        // Nodes may be stored in either sweep direction; sort order here is
        // descending in angle index.
        check_close(x[k], std::cos(ang), 1e-14, 1e-14);
        check_close(w[k], kPi / 8.0 * std::sin(ang) * std::sin(ang), 1e-14);
    }
}

TEST_CASE("grid weights sum to the sphere volume") {
    check_close(integrate_monomial(build_sphere_grid(3, 8), {0, 0, 0}), 4.0 * kPi,
                1e-13);
    check_close(integrate_monomial(build_sphere_grid(4, 8), {0, 0, 0, 0}),
                2.0 * kPi * kPi, 1e-13);
}

TEST_CASE("low moments integrate exactly") {
    check_close(integrate_monomial(build_sphere_grid(3, 8), {0, 0, 2}),
                4.0 * kPi / 3.0, 1e-13);
    check_close(integrate_monomial(build_sphere_grid(4, 8), {0, 0, 0, 2}),
                kPi * kPi / 2.0, 1e-13);
}

TEST_CASE("polynomial exactness at the declared degree") {
    const std::vector<std::vector<int>> mon3 = {
        {2, 0, 4}, {0, 6, 0}, {2, 2, 2}, {4, 2, 0}, {0, 0, 6}};
    SphereGrid g3 = build_sphere_grid(3, 6);
    for (const auto& m : mon3)
        check_close(integrate_monomial(g3, m), monomial_exact(m), 1e-13);

    const std::vector<std::vector<int>> mon4 = {
        {2, 0, 2, 2}, {0, 0, 0, 6}, {4, 2, 0, 0}, {0, 2, 2, 2}};
    SphereGrid g4 = build_sphere_grid(4, 6);
    for (const auto& m : mon4)
        check_close(integrate_monomial(g4, m), monomial_exact(m), 1e-13);

    // Odd monomials vanish by symmetry (absolute tolerance via the floor).
    check_close(integrate_monomial(g3, {1, 0, 2}), 0.0, 1.0, 1e-14);
    check_close(integrate_monomial(g4, {0, 1, 0, 3}), 0.0, 1.0, 1e-14);
}

TEST_CASE("unsupported dimensions are rejected") {
    CHECK_THROWS_AS(build_sphere_grid(2, 4), dsholo::UnsupportedDimension);
    CHECK_THROWS_AS(build_sphere_grid(5, 4), dsholo::UnsupportedDimension);
}
