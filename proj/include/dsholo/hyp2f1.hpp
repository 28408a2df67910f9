#pragma once

#include <complex>

#include "dsholo/gamma.hpp"

namespace dsholo {

struct HypergeometricParams {
    Complex a;
    Complex b;
    Complex c;
};

// Gauss hypergeometric function 2F1(a, b; c; z) for |z| <= 1, z != 1.
// Path selection: direct power series for |z| <= 0.9; otherwise the Pfaff
// transformation (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)) when it shrinks the
// argument modulus; otherwise the direct series again (convergent for
// |z| < 1, and on |z| = 1 when Re(c-a-b) > -1 excluding z = 1 — slow but
// within the iteration cap for the library's epsilon-shifted arguments).
// Throws DomainError at z = 1, ConvergenceError at the iteration cap.
Complex hyp2f1(const HypergeometricParams& p, Complex z);

// d/dz 2F1(a, b; c; z) = (a b / c) 2F1(a+1, b+1; c+1; z).
Complex hyp2f1_dz(const HypergeometricParams& p, Complex z);

namespace detail {

// The two evaluation paths, exposed for cross-validation in the overlap
// annulus.  Both throw as hyp2f1 does.
Complex hyp2f1_series(const HypergeometricParams& p, Complex z);
Complex hyp2f1_pfaff(const HypergeometricParams& p, Complex z);

}  // namespace detail

}  // namespace dsholo
