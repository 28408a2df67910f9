#include "dsholo/gegenbauer.hpp"

#include <cmath>

#include "dsholo/errors.hpp"

namespace dsholo {

Complex gegenbauer(int n, Complex lambda, double x) {
    if (n < 0) throw InvalidParameter("gegenbauer: n must be >= 0");
    if (n == 0) return 1.0;
    Complex cm1 = 1.0;
    Complex c0 = 2.0 * lambda * x;
    for (int k = 2; k <= n; ++k) {
        Complex ck = (2.0 * x * (static_cast<double>(k) + lambda - 1.0) * c0 -
                      (static_cast<double>(k) + 2.0 * lambda - 2.0) * cm1) /
                     static_cast<double>(k);
        cm1 = c0;
        c0 = ck;
    }
    return c0;
}

Complex gegenbauer_reduction_coeff(int n, int k, Complex tau, int d) {
    if (k < 0 || 2 * k > n)
        throw InvalidParameter("gegenbauer_reduction_coeff: requires 0 <= k <= n/2");
    double half_d = 0.5 * static_cast<double>(d);
    // All Gamma arguments lie in the right half-plane for principal-series
    // tau, so the ratio is safe as an exponentiated log difference.
    Complex lg = log_gamma(static_cast<double>(k) - tau - half_d + 1.0) +
                 log_gamma(static_cast<double>(n - k) - tau) -
                 log_gamma(-tau - half_d + 1.0) -
                 log_gamma(static_cast<double>(n - k) + half_d);
    double log_kfact = std::lgamma(static_cast<double>(k) + 1.0);
    return (static_cast<double>(n - 2 * k) + half_d - 1.0) * std::exp(lg - log_kfact);
}

}  // namespace dsholo
