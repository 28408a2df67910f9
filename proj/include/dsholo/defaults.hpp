#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

// Single source of truth for tolerances, gates, and the frozen numerical
// schemes.  Every tolerance that appears in a report comes from here.
namespace dsholo::defaults {

// --- parameter gates -------------------------------------------------------
// Below this the regularization factor 1/Gamma(-2 i nu) vanishes and the
// boundary limit degenerates; reject instead of approximating.
inline constexpr double nu_min = 1e-3;

// --- series control --------------------------------------------------------
inline constexpr std::size_t series_cap = 10000;
inline constexpr double series_tail_tol = 1e-16;

// --- verification tolerances ----------------------------------------------
inline constexpr double tol_gram_bulk = 1e-8;
inline constexpr double tol_gram_boundary = 1e-10;
inline constexpr double tol_expansion = 1e-4;
inline constexpr double tol_boundary_limit = 1e-4;
inline constexpr double tol_phase_modulus = 1e-10;
inline constexpr double tol_transform_direct = 1e-5;
inline constexpr double tol_transform_series = 1e-8;
inline constexpr double tol_antipodal_norm = 1e-12;
inline constexpr double stabilization_tol = 1e-4;

// --- evaluation-point control ----------------------------------------------
// Minimum imaginary shift as a function of conformal time: evaluations close
// to the boundary need epsilon scaled to the remaining distance so the series
// stays inside its accuracy envelope.
inline double eps_floor(double rho) {
    constexpr double half_pi = 1.5707963267948966;
    return std::max(1e-6, (half_pi - std::abs(rho)) / 10.0);
}

// --- frozen extrapolation schemes ------------------------------------------
// Boundary-limit node sequence: delta_k = 0.4 * 2^(-k/3), 14 nodes, chosen so
// the extrapolated past-side limit carries ~60x margin under
// tol_boundary_limit while the underlying series stays below series_cap.
inline std::vector<double> boundary_delta_sequence() {
    std::vector<double> seq(14);
    for (std::size_t k = 0; k < seq.size(); ++k)
        seq[k] = 0.4 * std::pow(2.0, -static_cast<double>(k) / 3.0);
    return seq;
}

// Short geometric-ratio-2 sequence; too shallow to stabilize the limit at
// the default tolerance (kept as the documented minimal example; the limit
// operation raises ExtrapolationError on it).
inline std::vector<double> short_delta_sequence() {
    return {0.2, 0.1, 0.05, 0.025};
}

// Kernel-path boundary projection: imaginary-shift ladder eps_k = 0.2 *
// 2^(-k/2), eliminated with integer Richardson exponents 1..8.  The bias of
// the closed-form-kernel pairing is a smooth power series in eps, so integer
// exponents suffice (measured residual ~2e-10 in double).
inline std::vector<double> kernel_eps_sequence() {
    std::vector<double> seq(9);
    for (std::size_t k = 0; k < seq.size(); ++k)
        seq[k] = 0.2 * std::pow(2.0, -static_cast<double>(k) / 2.0);
    return seq;
}

// Grid exactness needed by the smallest member of kernel_eps_sequence():
// angular aliasing decays like e^(-eps * p), and the extrapolation weights
// amplify the floor at the smallest eps by ~1e2.  p = 1800 leaves the
// extrapolated pairing at ~1e-7 (p = 1440 was measured at ~1e-5).
inline constexpr int kernel_pairing_grid_exactness = 1800;

// Bulk projection (L2 path): single imaginary shift and a grid wide enough
// that aliasing (~e^(-eps * p)) is negligible against tol_transform_direct.
inline constexpr double bulk_projection_epsilon = 0.05;
inline constexpr int bulk_projection_grid_exactness = 400;

}  // namespace dsholo::defaults
