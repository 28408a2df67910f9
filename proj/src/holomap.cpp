#include "dsholo/holomap.hpp"

#include <cmath>
#include <numeric>

#include "dsholo/defaults.hpp"
#include "dsholo/errors.hpp"
#include "dsholo/extrapolation.hpp"
#include "dsholo/reduce.hpp"

namespace dsholo {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.5707963267948966;
const Complex kI{0.0, 1.0};

void check_delta_sequence(const std::vector<double>& seq) {
    if (seq.size() < 2)
        throw InvalidParameter("boundary limit: need at least two delta nodes");
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
        if (!(seq[k] > seq[k + 1]) || !(seq[k + 1] > 0.0))
            throw InvalidParameter(
                "boundary limit: delta_sequence must be strictly decreasing positive");
}

// Dressed radial factor F_s F_p F_r x mode_radial at rho = sign (pi/2 - delta)
// with the contract coupling eps = eps_floor(rho).
Complex dressed_radial(const PrincipalParams& params, int L, double delta, int sign) {
    double rho = sign * (kHalfPi - delta);
    double eps = defaults::eps_floor(rho);
    BoundaryFactors f = boundary_factors(params, L, rho, eps);
    return f.F_s * f.F_p * f.F_r * mode_radial(params, L, rho, eps);
}

// Extrapolate the dressed radial factor to the boundary.
RichardsonResult dressed_limit(const PrincipalParams& params, int L,
                               const std::vector<double>& deltas, int sign) {
    check_delta_sequence(deltas);
    std::vector<Complex> vals(deltas.size());
    for (std::size_t k = 0; k < deltas.size(); ++k)
        vals[k] = dressed_radial(params, L, deltas[k], sign);
    auto ladder = boundary_exponent_ladder(params.nu, static_cast<int>(deltas.size()) - 1);
    return richardson_extrapolate(vals, deltas, ladder);
}

}  // namespace

Complex kernel_direct(const BulkPoint& p, const BoundaryPoint& b, const PrincipalParams& params) {
    NullDirection xi{1.0, b.u};
    Complex wave = plane_wave(p, xi, params);
    double half_d = 0.5 * static_cast<double>(params.d);
    return wave / (2.0 * std::pow(kPi, half_d));
}

Complex kernel_direct_drho(const BulkPoint& p, const BoundaryPoint& b,
                           const PrincipalParams& params) {
    // d/d rho log(x.xi/R) = i + tan rt - 2 i r (r - u.v) / (1 + r^2 - 2 r u.v).
    Complex rt{p.rho, -p.epsilon};
    Complex r = kI * std::exp(-kI * rt);
    double uv = std::inner_product(p.u.begin(), p.u.end(), b.u.begin(), 0.0);
    Complex big = 1.0 + r * r - 2.0 * r * uv;
    Complex dlog = kI + std::tan(rt) - 2.0 * kI * r * (r - uv) / big;
    return params.tau() * dlog * kernel_direct(p, b, params);
}

Complex kernel_series(const BulkPoint& p, const BoundaryPoint& b, const KernelEval& k) {
    const PrincipalParams& params = k.params;
    Complex sum = 0.0;
    for (int L = 0; L <= k.Lmax; ++L) {
        Complex radial = mode_radial(params, L, p.rho, p.epsilon);
        Complex angular = 0.0;
        for (const auto& idx : harmonic_indices_degree(params.d, L))
            angular += hyperspherical_Y(params.d, idx, p.u) *
                       std::conj(hyperspherical_Y(params.d, idx, b.u));
        sum += radial * angular;
    }
    return sum;
}

std::vector<Complex> transform_F1_multi(const std::vector<HarmonicIndex>& indices,
                                        const BulkPoint& p, const PrincipalParams& params,
                                        const SphereGrid& grid) {
    if (grid.d != params.d) throw GridMismatch("transform_F1: grid dimension mismatch");
    std::size_t n = grid.size();
    std::vector<Complex> kval(n);
    for (std::size_t i = 0; i < n; ++i)
        kval[i] = kernel_direct(p, BoundaryPoint{grid.node_vec(i)}, params);
    std::vector<Complex> out(indices.size());
    std::vector<Complex> integrand(n);
    std::vector<double> u(grid.d);
    for (std::size_t m = 0; m < indices.size(); ++m) {
        for (std::size_t i = 0; i < n; ++i) {
            u.assign(grid.node(i), grid.node(i) + grid.d);
            integrand[i] = kval[i] * hyperspherical_Y(params.d, indices[m], u);
        }
        out[m] = weighted_sum(integrand.data(), grid.weights.data(), n);
    }
    return out;
}

Complex transform_F1(const HarmonicIndex& idx, const BulkPoint& p,
                     const PrincipalParams& params, const SphereGrid& grid) {
    return transform_F1_multi({idx}, p, params, grid)[0];
}

Complex transform_F1_series(const HarmonicIndex& idx, const BulkPoint& p,
                            const PrincipalParams& params, const SphereGrid& grid, int Lmax) {
    if (grid.d != params.d) throw GridMismatch("transform_F1_series: grid dimension mismatch");
    KernelEval k{params, Lmax};
    std::vector<Complex> integrand(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        BoundaryPoint u{grid.node_vec(i)};
        integrand[i] = kernel_series(p, u, k) * hyperspherical_Y(params.d, idx, u.u);
    }
    return weighted_sum(integrand.data(), grid.weights.data(), grid.size());
}

Complex transform_F2_stage(const HarmonicIndex& idx, const BoundaryPoint& b,
                           const PrincipalParams& params, const SphereGrid& grid, double epsilon) {
    if (grid.d != params.d) throw GridMismatch("transform_F2: grid dimension mismatch");
    if (!(epsilon > 0.0))
        throw InvalidParameter("transform_F2: slice evaluation requires epsilon > 0");
    // Kernel as a bulk function on the rho = 0 slice at fixed boundary point
    // b, paired in the KG bracket with the (eps = 0) mode.
    std::size_t n = grid.size();
    std::vector<Complex> kval(n), dkval(n), mval(n), dmval(n);
    Complex radial = mode_radial(params, idx.L, 0.0, 0.0);
    Complex dradial = mode_radial_drho(params, idx.L, 0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        BulkPoint x{0.0, epsilon, grid.node_vec(i)};
        kval[i] = kernel_direct(x, b, params);
        dkval[i] = kernel_direct_drho(x, b, params);
        Complex y = hyperspherical_Y(params.d, idx, x.u);
        mval[i] = radial * y;
        dmval[i] = dradial * y;
    }
    Complex bracket = weighted_dot(kval.data(), dmval.data(), grid.weights.data(), n) -
                      std::conj(weighted_dot(mval.data(), dkval.data(), grid.weights.data(), n));
    return kI * kg_normalization(params) * bracket;
}

std::vector<Complex> transform_F2_multi(const std::vector<HarmonicIndex>& indices,
                                        const BoundaryPoint& b, const PrincipalParams& params,
                                        const SphereGrid& grid,
                                        const std::vector<double>& eps_sequence) {
    if (grid.d != params.d) throw GridMismatch("transform_F2: grid dimension mismatch");
    check_delta_sequence(eps_sequence);
    std::size_t n = grid.size();
    std::size_t nm = indices.size();

    // The harmonic tabulations and the radial slice constants are
    // stage-independent; the kernel slice is retabulated per stage.
    std::vector<std::vector<Complex>> ytab(nm);
    std::vector<Complex> radial(nm), dradial(nm);
    std::vector<double> ubuf(grid.d);
    for (std::size_t m = 0; m < nm; ++m) {
        ytab[m].resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            ubuf.assign(grid.node(i), grid.node(i) + grid.d);
            ytab[m][i] = hyperspherical_Y(params.d, indices[m], ubuf);
        }
        radial[m] = mode_radial(params, indices[m].L, 0.0, 0.0);
        dradial[m] = mode_radial_drho(params, indices[m].L, 0.0, 0.0);
    }

    double c_tau = kg_normalization(params);
    Complex tau = params.tau();
    double norm = 2.0 * std::pow(kPi, 0.5 * static_cast<double>(params.d));
    std::vector<std::vector<Complex>> stage_vals(nm,
                                                 std::vector<Complex>(eps_sequence.size()));
    std::vector<Complex> kval(n), dkval(n);
    for (std::size_t s = 0; s < eps_sequence.size(); ++s) {
        double eps = eps_sequence[s];
        // Kernel and its rho-derivative share one principal power per node.
        Complex rt{0.0, -eps};
        Complex r = kI * std::exp(-kI * rt);
        Complex front = std::exp(kI * rt) / (Complex{0.0, 2.0} * std::cos(rt));
        Complex tanrt = std::tan(rt);
        for (std::size_t i = 0; i < n; ++i) {
            const double* un = grid.node(i);
            double uv = 0.0;
            for (int c = 0; c < params.d; ++c) uv += un[c] * b.u[c];
            Complex big = 1.0 + r * r - 2.0 * r * uv;
            Complex k = std::exp(tau * std::log(front * big)) / norm;
            kval[i] = k;
            dkval[i] = tau * (kI + tanrt - 2.0 * kI * r * (r - uv) / big) * k;
        }
        for (std::size_t m = 0; m < nm; ++m) {
            // mval = radial ytab and dmval = dradial ytab; the scalar radial
            // factors pull out of the two reductions.
            Complex p = weighted_dot(kval.data(), ytab[m].data(), grid.weights.data(), n);
            Complex q = weighted_dot(ytab[m].data(), dkval.data(), grid.weights.data(), n);
            stage_vals[m][s] = kI * c_tau * (dradial[m] * p - radial[m] * std::conj(q));
        }
    }

    // The slice bias is a smooth power series in eps: integer exponents.
    std::vector<Complex> exps(eps_sequence.size() - 1);
    for (std::size_t j = 0; j < exps.size(); ++j) exps[j] = static_cast<double>(j + 1);
    std::vector<Complex> out(nm);
    for (std::size_t m = 0; m < nm; ++m)
        out[m] = richardson_extrapolate(stage_vals[m], eps_sequence, exps).value;
    return out;
}

Complex transform_F2(const HarmonicIndex& idx, const BoundaryPoint& b,
                     const PrincipalParams& params, const SphereGrid& grid,
                     const std::vector<double>& eps_sequence) {
    return transform_F2_multi({idx}, b, params, grid, eps_sequence)[0];
}

Complex transform_F2(const HarmonicIndex& idx, const BoundaryPoint& b,
                     const PrincipalParams& params, const SphereGrid& grid) {
    return transform_F2(idx, b, params, grid, defaults::kernel_eps_sequence());
}

Complex transform_F2_series(const HarmonicIndex& idx, const BoundaryPoint& b,
                            const PrincipalParams& params, const SphereGrid& grid, int Lmax) {
    if (grid.d != params.d) throw GridMismatch("transform_F2_series: grid dimension mismatch");
    std::size_t n = grid.size();
    std::vector<Complex> kval(n), dkval(n), mval(n), dmval(n);
    // The truncated series kernel is polynomial on the slice, so eps = 0 is
    // admissible here (each mode factor is evaluated on the circle directly).
    std::vector<Complex> rad(Lmax + 1), drad(Lmax + 1);
    for (int L = 0; L <= Lmax; ++L) {
        rad[L] = mode_radial(params, L, 0.0, 0.0);
        drad[L] = mode_radial_drho(params, L, 0.0, 0.0);
    }
    Complex mode_rad = mode_radial(params, idx.L, 0.0, 0.0);
    Complex mode_drad = mode_radial_drho(params, idx.L, 0.0, 0.0);
    auto indices = harmonic_indices(params.d, Lmax);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> u = grid.node_vec(i);
        Complex kern = 0.0, dkern = 0.0;
        for (const auto& midx : indices) {
            Complex yy = hyperspherical_Y(params.d, midx, u) *
                         std::conj(hyperspherical_Y(params.d, midx, b.u));
            kern += rad[midx.L] * yy;
            dkern += drad[midx.L] * yy;
        }
        kval[i] = kern;
        dkval[i] = dkern;
        Complex y = hyperspherical_Y(params.d, idx, u);
        mval[i] = mode_rad * y;
        dmval[i] = mode_drad * y;
    }
    Complex bracket = weighted_dot(kval.data(), dmval.data(), grid.weights.data(), n) -
                      std::conj(weighted_dot(mval.data(), dkval.data(), grid.weights.data(), n));
    return kI * kg_normalization(params) * bracket;
}

BoundaryLimit past_boundary_limit(const HarmonicIndex& idx, const BoundaryPoint& b,
                                  const PrincipalParams& params,
                                  const std::vector<double>& delta_sequence) {
    validate_harmonic_index(params.d, idx);
    RichardsonResult r = dressed_limit(params, idx.L, delta_sequence, -1);
    if (r.stabilization > defaults::stabilization_tol)
        throw ExtrapolationError(
            "past_boundary_limit: delta sequence did not stabilize to tolerance");
    BoundaryLimit out;
    out.phase = std::exp(-kI * kPi * params.tau());
    out.limit = r.value * hyperspherical_Y(params.d, idx, b.u);
    out.stabilization = r.stabilization;
    out.order = r.order;
    return out;
}

BoundaryLimit future_boundary_limit(const HarmonicIndex& idx, const BoundaryPoint& b,
                                    const PrincipalParams& params,
                                    const std::vector<double>& delta_sequence) {
    validate_harmonic_index(params.d, idx);
    RichardsonResult r = dressed_limit(params, idx.L, delta_sequence, +1);
    if (r.stabilization > defaults::stabilization_tol)
        throw ExtrapolationError(
            "future_boundary_limit: delta sequence did not stabilize to tolerance");
    BoundaryLimit out;
    out.phase = 1.0;
    out.limit = r.value * hyperspherical_Y(params.d, idx, b.u);
    out.stabilization = r.stabilization;
    out.order = r.order;
    return out;
}

}  // namespace dsholo
