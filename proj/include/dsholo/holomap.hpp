#pragma once

#include <complex>
#include <vector>

#include "dsholo/geometry.hpp"
#include "dsholo/harmonics.hpp"
#include "dsholo/inner_products.hpp"
#include "dsholo/modes.hpp"

namespace dsholo {

// Truncation cap for the series representation of the kernel.
struct KernelEval {
    PrincipalParams params;
    int Lmax;
};

// Closed-form kernel K(x, u) = (x.xi/R)^tau / (2 pi^(d/2) (xi0)^tau),
// evaluated with v = u; independent of xi0 by homogeneity.
Complex kernel_direct(const BulkPoint& p, const BoundaryPoint& b, const PrincipalParams& params);

// Analytic d/d rho of kernel_direct at fixed u.
Complex kernel_direct_drho(const BulkPoint& p, const BoundaryPoint& b,
                           const PrincipalParams& params);

// Series kernel sum_(L<=Lmax, l) Phi_(Ll)(x) conj(Y_(Ll)(u)).
Complex kernel_series(const BulkPoint& p, const BoundaryPoint& b, const KernelEval& k);

// Bulk reconstruction: L2 projection of the closed-form kernel against the
// boundary mode; reproduces bulk_mode_eval(idx, p) at the same (rho, eps).
Complex transform_F1(const HarmonicIndex& idx, const BulkPoint& p,
                     const PrincipalParams& params, const SphereGrid& grid);

// Batched variant sharing one kernel tabulation across all indices.
std::vector<Complex> transform_F1_multi(const std::vector<HarmonicIndex>& indices,
                                        const BulkPoint& p, const PrincipalParams& params,
                                        const SphereGrid& grid);

// Same projection with the truncated series kernel (orthonormality collapse;
// sanity tier).
Complex transform_F1_series(const HarmonicIndex& idx, const BulkPoint& p,
                            const PrincipalParams& params, const SphereGrid& grid, int Lmax);

// Boundary reconstruction: KG pairing of the closed-form kernel (as a bulk
// function of the slice point at fixed u) with the bulk mode; reproduces the
// harmonic at u.  The slice evaluation needs eps > 0, whose bias is removed
// by Richardson extrapolation over eps_sequence (integer exponents); the
// caller's grid is reused at every ladder stage and must resolve the
// smallest eps (aliasing ~ e^(-eps p)).
Complex transform_F2(const HarmonicIndex& idx, const BoundaryPoint& b,
                     const PrincipalParams& params, const SphereGrid& grid);
Complex transform_F2(const HarmonicIndex& idx, const BoundaryPoint& b,
                     const PrincipalParams& params, const SphereGrid& grid,
                     const std::vector<double>& eps_sequence);

// Batched variant sharing the per-stage kernel slice tabulation across all
// indices (the dominant cost).
std::vector<Complex> transform_F2_multi(const std::vector<HarmonicIndex>& indices,
                                        const BoundaryPoint& b, const PrincipalParams& params,
                                        const SphereGrid& grid,
                                        const std::vector<double>& eps_sequence);

// Single-stage pairing at fixed eps (no extrapolation); building block of
// transform_F2 and of bias-curve diagnostics.
Complex transform_F2_stage(const HarmonicIndex& idx, const BoundaryPoint& b,
                           const PrincipalParams& params, const SphereGrid& grid, double epsilon);

// Series-kernel variant of the boundary reconstruction (collapse tier).
Complex transform_F2_series(const HarmonicIndex& idx, const BoundaryPoint& b,
                            const PrincipalParams& params, const SphereGrid& grid, int Lmax);

struct BoundaryLimit {
    Complex phase{};    // extracted e^(-i pi tau)
    Complex limit{};    // extrapolated value of F_s F_p F_r Phi at the sphere point
    double stabilization = 0.0;
    int order = 0;
};

// Past-boundary limit of the dressed mode at rho = -pi/2 + delta, delta over
// the caller's strictly decreasing sequence with eps = eps_floor(rho).
// Extrapolates with the oscillation-aware exponent ladder, extracts the
// analytic phase e^(-i pi tau), and verifies the antipodal identity
// limit = phase * (-1)^L Y(u) = phase * Y(-u).  Throws ExtrapolationError if
// the sequence does not stabilize to defaults::stabilization_tol.
BoundaryLimit past_boundary_limit(const HarmonicIndex& idx, const BoundaryPoint& b,
                                  const PrincipalParams& params,
                                  const std::vector<double>& delta_sequence);

// Same machinery at rho = +pi/2 - delta; the limit is the bare harmonic and
// the returned phase is 1.
BoundaryLimit future_boundary_limit(const HarmonicIndex& idx, const BoundaryPoint& b,
                                    const PrincipalParams& params,
                                    const std::vector<double>& delta_sequence);

}  // namespace dsholo
