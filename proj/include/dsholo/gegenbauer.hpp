#pragma once

#include <complex>

#include "dsholo/gamma.hpp"

namespace dsholo {

// Gegenbauer polynomial C_n^lambda(x) by the standard three-term recurrence
// seeded with C_0 = 1, C_1 = 2 lambda x.  Complex order, real argument.
Complex gegenbauer(int n, Complex lambda, double x);

// Coefficient c_k in the reduction of a complex-order Gegenbauer polynomial
// onto the integer-order family:
//   c_k = (n - 2k + d/2 - 1) Gamma(k - tau - d/2 + 1) Gamma(n - k - tau)
//         / [ k! Gamma(-tau - d/2 + 1) Gamma(n - k + d/2) ].
// Requires 0 <= k <= n/2.
Complex gegenbauer_reduction_coeff(int n, int k, Complex tau, int d);

}  // namespace dsholo
