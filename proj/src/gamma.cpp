#include "dsholo/gamma.hpp"

#include <cmath>

#include "dsholo/errors.hpp"

namespace dsholo {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.8378770664093454836;  // log(2 pi)

// Lanczos approximation, g = 607/128, 15 coefficients (Godfrey's set);
// relative error ~1e-15 on the right half-plane.
constexpr double kG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

bool is_nonpositive_integer(Complex z) {
    if (z.imag() != 0.0) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < 1e-13;
}

// log Gamma(z) for Re z > 0, modulo 2 pi i (sufficient for ratios formed by
// exponentiating differences; the real part is exact).
Complex log_gamma_right(Complex z) {
    Complex zm1 = z - 1.0;
    Complex acc = kLanczos[0];
    for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (zm1 + static_cast<double>(k));
    Complex t = zm1 + kG + 0.5;
    return 0.5 * kLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

Complex complex_gamma(Complex z) {
    if (is_nonpositive_integer(z))
        throw PoleError("complex_gamma: pole at non-positive integer z");
    if (z.real() >= 0.5) return std::exp(log_gamma_right(z));
    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
    Complex s = std::sin(kPi * z);
    return kPi / (s * std::exp(log_gamma_right(1.0 - z)));
}

Complex log_gamma(Complex z) {
    if (z.real() <= 0.0)
        throw DomainError("log_gamma: requires Re z > 0");
    return log_gamma_right(z);
}

}  // namespace dsholo
