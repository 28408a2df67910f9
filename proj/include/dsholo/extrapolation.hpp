#pragma once

#include <complex>
#include <vector>

namespace dsholo {

using Complex = std::complex<double>;

struct RichardsonResult {
    Complex value{};
    // Relative change between the final elimination stage and the previous
    // one; the caller's stabilization measure.
    double stabilization = 0.0;
    // Number of elimination stages actually applied.
    int order = 0;
};

// Generalized Richardson extrapolation of f(h) -> A as h -> 0 for an error
// model f(h) = A + sum_j c_j h^(p_j) with known (possibly complex) exponents
// p_j, on arbitrary strictly decreasing positive nodes.  Stage j eliminates
// exponent p_j via
//   v'_k = (h_k^p v_(k+1) - h_(k+1)^p v_k) / (h_k^p - h_(k+1)^p).
// At most min(exponents, nodes - 1) stages are applied.
RichardsonResult richardson_extrapolate(const std::vector<Complex>& values,
                                        const std::vector<double>& nodes,
                                        const std::vector<Complex>& exponents);

// The exponent ladder for the boundary-limit error model: the connection
// formula at the boundary produces, besides integer powers of delta, a
// delta^(-2 i nu) oscillatory family; the ladder alternates
// {-2 i nu, 1, 1 - 2 i nu, 2, 2 - 2 i nu, ...} up to the requested length.
std::vector<Complex> boundary_exponent_ladder(double nu, int length);

}  // namespace dsholo
