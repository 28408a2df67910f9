#include "dsholo/rng.hpp"

#include <cmath>

#include "dsholo/errors.hpp"

namespace dsholo {

double SplitMix64::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 shifted into (0, 1] to keep the log finite.
    double u1 = 1.0 - next_double();
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::vector<double> random_unit_vector(int d, SplitMix64& rng) {
    if (d < 1) throw InvalidParameter("random_unit_vector: requires d >= 1");
    std::vector<double> v(d);
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (int i = 0; i < d; ++i) {
            v[i] = rng.next_normal();
            n2 += v[i] * v[i];
        }
    } while (n2 < 1e-12);
    double inv = 1.0 / std::sqrt(n2);
    for (double& x : v) x *= inv;
    return v;
}

double random_symmetric(double bound, SplitMix64& rng) {
    return bound * (2.0 * rng.next_double() - 1.0);
}

}  // namespace dsholo
