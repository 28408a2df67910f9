#pragma once

#include <complex>

namespace dsholo {

using Complex = std::complex<double>;

// Gamma function over the complex plane (Lanczos approximation plus the
// reflection formula for Re z < 0.5).  Relative accuracy ~1e-13 on the
// moderate strip used by the library.  Throws PoleError at non-positive
// integers.
Complex complex_gamma(Complex z);

// Principal log-Gamma for Re z > 0 (no reflection, no branch ambiguity).
// Used for stable Gamma ratios with large arguments.  Throws DomainError for
// Re z <= 0.
Complex log_gamma(Complex z);

}  // namespace dsholo
