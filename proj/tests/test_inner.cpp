#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "approx.hpp"
#include "dsholo/harmonics.hpp"
#include "dsholo/inner_products.hpp"
#include "dsholo/modes.hpp"
#include "dsholo/sphere_grid.hpp"

using dsholo::Complex;
using dsholo::PrincipalParams;
using dsholo::SphereGrid;
using dsholo::build_sphere_grid;
using dsholo::harmonic_gram_check;
using dsholo::kg_norm_check;
using testutil::check_close;

namespace {
const PrincipalParams kD3Nu1{3, 1.0};
}

TEST_CASE("harmonics are orthonormal under the grid L2 product") {
    SphereGrid grid = build_sphere_grid(3, 12);
    dsholo::HarmonicIndex idx{2, {1}};
    auto y = [&](const std::vector<double>& u) {
        return dsholo::hyperspherical_Y(3, idx, u);
    };
    check_close(dsholo::l2_inner(y, y, grid), {1.0, 0.0}, 1e-13);

    auto r = harmonic_gram_check(3, 5, grid);
    CHECK(r.n_modes == 36);
    CHECK(!r.under_resolved);
    CHECK(r.max_deviation < 1e-12);

    auto r4 = harmonic_gram_check(4, 6, build_sphere_grid(4, 14));
    CHECK(r4.n_modes == 140);
    CHECK(r4.max_deviation < 1e-12);
}

TEST_CASE("bulk modes are KG-orthonormal with the pinned normalization") {
    SphereGrid grid = build_sphere_grid(3, 10);
    auto r = kg_norm_check(kD3Nu1, 3, grid);
    CHECK(r.n_modes == 16);
    CHECK(!r.under_resolved);
    CHECK(r.max_deviation < 1e-12);

    auto r4 = kg_norm_check({4, 0.5}, 2, build_sphere_grid(4, 10));
    CHECK(r4.n_modes == 14);
    CHECK(r4.max_deviation < 1e-12);
}

TEST_CASE("under-resolved grids are flagged") {
    auto r = kg_norm_check(kD3Nu1, 3, build_sphere_grid(3, 4));
    CHECK(r.under_resolved);
    auto g = harmonic_gram_check(3, 4, build_sphere_grid(3, 6));
    CHECK(g.under_resolved);
}

TEST_CASE("KG product is Hermitian and positive on modes") {
    SphereGrid grid = build_sphere_grid(3, 10);
    dsholo::HarmonicIndex i1{1, {0}}, i2{2, {-1}};
    auto tab = [&](const dsholo::HarmonicIndex& idx, bool deriv) {
        std::vector<Complex> vals(grid.size());
        Complex radial = deriv ? dsholo::mode_radial_drho(kD3Nu1, idx.L, 0.0, 0.0)
                               : dsholo::mode_radial(kD3Nu1, idx.L, 0.0, 0.0);
        for (std::size_t i = 0; i < grid.size(); ++i)
            vals[i] = radial * dsholo::hyperspherical_Y(3, idx, grid.node_vec(i));
        return vals;
    };
    auto f = tab(i1, false), df = tab(i1, true);
    auto g = tab(i2, false), dg = tab(i2, true);
    Complex fg = dsholo::kg_inner(f, df, g, dg, kD3Nu1, grid);
    Complex gf = dsholo::kg_inner(g, dg, f, df, kD3Nu1, grid);
    check_close(fg, std::conj(gf), 1e-13, 1e-14);
    Complex ff = dsholo::kg_inner(f, df, f, df, kD3Nu1, grid);
    CHECK(ff.real() > 0.999);
    CHECK(std::abs(ff.imag()) < 1e-13);
}

TEST_CASE("Gram deviation is stable under grid refinement") {
    double dev1 = kg_norm_check(kD3Nu1, 3, build_sphere_grid(3, 10)).max_deviation;
    double dev2 = kg_norm_check(kD3Nu1, 3, build_sphere_grid(3, 20)).max_deviation;
    CHECK(dev1 < 1e-12);
    CHECK(dev2 < 1e-12);
}
