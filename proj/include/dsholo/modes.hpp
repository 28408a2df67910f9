#pragma once

#include <complex>

#include "dsholo/geometry.hpp"
#include "dsholo/harmonics.hpp"

namespace dsholo {

struct BulkMode {
    PrincipalParams params;
    HarmonicIndex idx;
};

enum class BoundarySide { future, past };

struct BoundaryMode {
    PrincipalParams params;
    HarmonicIndex idx;
    BoundarySide side;
};

// Scale, phase, and regularization factors of the boundary limit.
struct BoundaryFactors {
    Complex F_s;  // (2 cos rt)^tau Gamma(-tau) Gamma(tau + d/2)
    Complex F_p;  // Gamma(L + (d-1)/2 - i nu) / Gamma(L + (d-1)/2 + i nu), |F_p| = 1
    Complex F_r;  // 1 / Gamma(-2 i nu)
};

// dS plane wave (x . xi / R)^tau under the principal branch.  Throws
// BranchCutError if the base sits on the cut with eps = 0.
Complex plane_wave(const BulkPoint& p, const NullDirection& xi, const PrincipalParams& params);

// Radial factor of the bulk mode (everything except the harmonic):
//   i^(L-tau) e^(-i(L-tau) rt) (2 cos rt)^(-tau)
//     * Gamma(L-tau) / [Gamma(L+d/2) Gamma(-tau)]
//     * 2F1(L-tau, -tau-d/2+1; L+d/2; -e^(-2 i rt)),   rt = rho - i eps,
// with i^(L-tau) taken as exp((L-tau) i pi/2).
Complex mode_radial(const PrincipalParams& params, int L, double rho, double epsilon);

// Analytic d/d rho of mode_radial.
Complex mode_radial_drho(const PrincipalParams& params, int L, double rho, double epsilon);

// Full bulk mode: mode_radial times the harmonic at u.
Complex bulk_mode_eval(const BulkMode& m, const BulkPoint& p);
Complex bulk_mode_drho(const BulkMode& m, const BulkPoint& p);

// Relative truncation residual of the plane-wave expansion in bulk modes:
//   |(x.xi/R)^tau - 2 pi^(d/2) (xi0)^tau sum_(L<=Lmax, l) Phi_(Ll)(x) Y*_(Ll)(v)|
//   / |(x.xi/R)^tau|.
// Requires eps > 0 (series converges like e^(-eps L)).
double expansion_residual(const BulkPoint& p, const NullDirection& xi,
                          const PrincipalParams& params, int Lmax);

// Limit factors at conformal time rho with shift eps.  Throws PoleError if
// |nu| is below the gate.
BoundaryFactors boundary_factors(const PrincipalParams& params, int L, double rho, double epsilon);

// Boundary mode: the harmonic itself on the future sphere; on the past
// sphere the same harmonic read at the antipodally identified point.
Complex boundary_mode_eval(const BoundaryMode& m, const BoundaryPoint& b);

// Klein-Gordon normalization constant, fixed by requiring unit norm of the
// bulk modes: c_tau = 2^(2 Re tau) e^(-pi Im tau) |Gamma(-tau)|^2
//            = 2^(1-d) e^(pi nu) |Gamma((d-1)/2 + i nu)|^2.
double kg_normalization(const PrincipalParams& params);

}  // namespace dsholo
