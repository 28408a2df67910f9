#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "dsholo/geometry.hpp"
#include "dsholo/sphere_grid.hpp"

namespace dsholo {

// Function of a point on S^(d-1).
using BoundaryFn = std::function<Complex(const std::vector<double>&)>;

// Tabulate f on the grid nodes.
std::vector<Complex> tabulate(const BoundaryFn& f, const SphereGrid& grid);

// L2 inner product <f, g> = sum_i w_i conj(f_i) g_i over grid nodes
// (conjugate-linear in the first argument).
Complex l2_inner(const std::vector<Complex>& f, const std::vector<Complex>& g,
                 const SphereGrid& grid);
Complex l2_inner(const BoundaryFn& f, const BoundaryFn& g, const SphereGrid& grid);

// Klein-Gordon inner product on the rho = 0 slice from tabulated slice values
// and rho-derivatives:  i c_tau sum_i w_i [conj(f_i) dg_i - g_i conj(df_i)].
Complex kg_inner(const std::vector<Complex>& f, const std::vector<Complex>& df,
                 const std::vector<Complex>& g, const std::vector<Complex>& dg,
                 const PrincipalParams& params, const SphereGrid& grid);

struct GramResult {
    double max_deviation = 0.0;   // max |Gram - Identity| entry
    bool under_resolved = false;  // grid exactness below 2 * Lmax
    int n_modes = 0;
};

// Gram matrix of the bulk modes with L <= Lmax under the KG product at
// rho = 0, eps = 0, against the identity.
GramResult kg_norm_check(const PrincipalParams& params, int Lmax, const SphereGrid& grid);

// Gram matrix of the harmonics with L <= Lmax under the L2 product.
GramResult harmonic_gram_check(int d, int Lmax, const SphereGrid& grid);

}  // namespace dsholo
