#include "dsholo/hyp2f1.hpp"

#include <cmath>

#include "dsholo/defaults.hpp"
#include "dsholo/errors.hpp"

namespace dsholo {

namespace detail {

namespace {

bool is_nonpositive_integer(Complex z) {
    if (z.imag() != 0.0) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < 1e-13;
}

}  // namespace

Complex hyp2f1_series(const HypergeometricParams& p, Complex z) {
    if (is_nonpositive_integer(p.c))
        throw DomainError("hyp2f1: c is a non-positive integer");
    // Term recurrence with compensated (Kahan) accumulation: near |z| = 1 the
    // series runs to thousands of terms and plain summation would leave
    // ~1e-12 of roundoff in the extrapolation inputs.
    Complex term = 1.0;
    Complex sum = 1.0;
    Complex comp = 0.0;
    std::size_t small_streak = 0;
    for (std::size_t n = 0; n < defaults::series_cap; ++n) {
        double dn = static_cast<double>(n);
        term *= z * ((p.a + dn) * (p.b + dn)) / ((p.c + dn) * (dn + 1.0));
        Complex y = term - comp;
        Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) <= defaults::series_tail_tol * std::abs(sum)) {
            // Two consecutive negligible terms: individual terms can vanish
            // when (a+n) or (b+n) crosses zero without the tail being done.
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw ConvergenceError("hyp2f1: series did not reach tail tolerance within the term cap");
}

Complex hyp2f1_pfaff(const HypergeometricParams& p, Complex z) {
    Complex w = z / (z - 1.0);
    Complex pref = std::exp(-p.a * std::log(1.0 - z));
    return pref * hyp2f1_series({p.a, p.c - p.b, p.c}, w);
}

}  // namespace detail

Complex hyp2f1(const HypergeometricParams& p, Complex z) {
    double az = std::abs(z);
    if (std::abs(z - 1.0) < 1e-15)
        throw DomainError("hyp2f1: z = 1 is outside the domain");
    if (az > 1.0 + 1e-14)
        throw DomainError("hyp2f1: |z| > 1 is not supported");
    if (az <= 0.9) return detail::hyp2f1_series(p, z);
    // Use the Pfaff transformation only when it actually shrinks the
    // argument modulus; near z -> 1 along the epsilon-shifted circle the
    // mapped argument z/(z-1) leaves the unit disk and the direct series
    // (convergent, if slow) is the correct path.
    if (std::abs(z / (z - 1.0)) < az) return detail::hyp2f1_pfaff(p, z);
    return detail::hyp2f1_series(p, z);
}

Complex hyp2f1_dz(const HypergeometricParams& p, Complex z) {
    return (p.a * p.b / p.c) * hyp2f1({p.a + 1.0, p.b + 1.0, p.c + 1.0}, z);
}

}  // namespace dsholo
