#include "dsholo/modes.hpp"

#include <cmath>

#include "dsholo/defaults.hpp"
#include "dsholo/errors.hpp"
#include "dsholo/hyp2f1.hpp"

namespace dsholo {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI{0.0, 1.0};

struct RadialParts {
    Complex pref;   // i^(L-tau) e^(-i(L-tau) rt) (2 cos rt)^(-tau)
    Complex amp;    // Gamma(L-tau) / [Gamma(L+d/2) Gamma(-tau)]
    Complex z;      // -e^(-2 i rt)
    Complex rt;
    HypergeometricParams hyp;
};

RadialParts radial_parts(const PrincipalParams& params, int L, double rho, double epsilon) {
    Complex tau = params.tau();
    double half_d = 0.5 * static_cast<double>(params.d);
    RadialParts parts;
    parts.rt = Complex{rho, -epsilon};
    Complex lmt = static_cast<double>(L) - tau;
    parts.pref = std::exp(lmt * (kI * kPi / 2.0 - kI * parts.rt)) *
                 std::exp(-tau * std::log(2.0 * std::cos(parts.rt)));
    parts.amp = std::exp(log_gamma(lmt) - log_gamma(static_cast<double>(L) + half_d) -
                         log_gamma(-tau));
    parts.z = -std::exp(-2.0 * kI * parts.rt);
    parts.hyp = {lmt, -tau - half_d + 1.0, static_cast<double>(L) + half_d};
    return parts;
}

}  // namespace

Complex plane_wave(const BulkPoint& p, const NullDirection& xi, const PrincipalParams& params) {
    Complex dot = conformal_dot(p, xi, params);
    if (dot.imag() == 0.0 && dot.real() <= 0.0)
        throw BranchCutError(
            "plane_wave: base on the principal-branch cut; evaluate with epsilon > 0");
    return std::exp(params.tau() * std::log(dot));
}

Complex mode_radial(const PrincipalParams& params, int L, double rho, double epsilon) {
    RadialParts parts = radial_parts(params, L, rho, epsilon);
    return parts.pref * parts.amp * hyp2f1(parts.hyp, parts.z);
}

Complex mode_radial_drho(const PrincipalParams& params, int L, double rho, double epsilon) {
    RadialParts parts = radial_parts(params, L, rho, epsilon);
    Complex tau = params.tau();
    Complex f = hyp2f1(parts.hyp, parts.z);
    Complex df = hyp2f1_dz(parts.hyp, parts.z);
    // d/d rho of the prefactor is [-i(L-tau) + tau tan rt] x prefactor;
    // dz/d rho = -2 i z.
    Complex dlog_pref = -kI * (static_cast<double>(L) - tau) + tau * std::tan(parts.rt);
    return parts.amp * parts.pref * (dlog_pref * f + df * (-2.0 * kI * parts.z));
}

Complex bulk_mode_eval(const BulkMode& m, const BulkPoint& p) {
    return mode_radial(m.params, m.idx.L, p.rho, p.epsilon) *
           hyperspherical_Y(m.params.d, m.idx, p.u);
}

Complex bulk_mode_drho(const BulkMode& m, const BulkPoint& p) {
    return mode_radial_drho(m.params, m.idx.L, p.rho, p.epsilon) *
           hyperspherical_Y(m.params.d, m.idx, p.u);
}

double expansion_residual(const BulkPoint& p, const NullDirection& xi,
                          const PrincipalParams& params, int Lmax) {
    if (p.epsilon <= 0.0)
        throw InvalidParameter("expansion_residual: requires epsilon > 0 for convergence");
    Complex lhs = plane_wave(p, xi, params);
    Complex tau = params.tau();
    double half_d = 0.5 * static_cast<double>(params.d);
    Complex prefactor = 2.0 * std::pow(kPi, half_d) * std::exp(tau * std::log(xi.xi0));
    Complex sum = 0.0;
    for (int L = 0; L <= Lmax; ++L) {
        Complex radial = mode_radial(params, L, p.rho, p.epsilon);
        // Sum over the degree-L harmonics: Y_(Ll)(u) conj(Y_(Ll)(v)).
        Complex angular = 0.0;
        for (const HarmonicIndex& idx : harmonic_indices_degree(params.d, L))
            angular += hyperspherical_Y(params.d, idx, p.u) *
                       std::conj(hyperspherical_Y(params.d, idx, xi.v));
        sum += radial * angular;
    }
    return std::abs(lhs - prefactor * sum) / std::abs(lhs);
}

BoundaryFactors boundary_factors(const PrincipalParams& params, int L, double rho, double epsilon) {
    if (std::abs(params.nu) < defaults::nu_min)
        throw PoleError("boundary_factors: 1/Gamma(-2 i nu) degenerates as nu -> 0");
    Complex tau = params.tau();
    Complex rt{rho, -epsilon};
    double half_d1 = 0.5 * static_cast<double>(params.d - 1);
    BoundaryFactors f;
    f.F_s = std::exp(tau * std::log(2.0 * std::cos(rt))) * complex_gamma(-tau) *
            complex_gamma(tau + 0.5 * static_cast<double>(params.d));
    f.F_p = std::exp(log_gamma(Complex{static_cast<double>(L) + half_d1, -params.nu}) -
                     log_gamma(Complex{static_cast<double>(L) + half_d1, params.nu}));
    f.F_r = 1.0 / complex_gamma(Complex{0.0, -2.0 * params.nu});
    return f;
}

Complex boundary_mode_eval(const BoundaryMode& m, const BoundaryPoint& b) {
    // Both asymptotic spheres carry the same harmonic basis; the antipodal
    // identification between them is applied by callers via the parity
    // relation Y(-u) = (-1)^L Y(u).
    return hyperspherical_Y(m.params.d, m.idx, b.u);
}

double kg_normalization(const PrincipalParams& params) {
    // 2^(2 Re tau) e^(-pi Im tau) |Gamma(-tau)|^2.  The exponent sign on the
    // e^(pi nu) factor is fixed by requiring the modes to have unit
    // Klein-Gordon norm: with the opposite sign the whole Gram matrix comes
    // out scaled by e^(-2 pi nu).
    Complex tau = params.tau();
    double g = std::abs(complex_gamma(-tau));
    return std::pow(2.0, 2.0 * tau.real()) * std::exp(-kPi * tau.imag()) * g * g;
}

}  // namespace dsholo
