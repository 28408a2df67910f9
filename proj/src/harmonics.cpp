#include "dsholo/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dsholo/errors.hpp"
#include "dsholo/gegenbauer.hpp"

namespace dsholo {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_unit(const std::vector<double>& u, int d) {
    if (static_cast<int>(u.size()) != d)
        throw InvalidParameter("hyperspherical_Y: point dimension mismatch");
    double n2 = std::inner_product(u.begin(), u.end(), u.begin(), 0.0);
    if (std::abs(n2 - 1.0) > 2e-12)
        throw InvalidParameter("hyperspherical_Y: |u| must be 1 within 1e-12");
}

// Orthonormal associated Legendre P_L^m(cos theta) with the Condon-Shortley
// phase folded in; normalized so that P_L^m e^{i m phi} is a unit-norm
// spherical harmonic.
double assoc_legendre_norm(int L, int m, double c, double s) {
    double pmm = std::sqrt(1.0 / (4.0 * kPi));
    for (int k = 1; k <= m; ++k)
        pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
    if (L == m) return pmm;
    double pm1 = std::sqrt(2.0 * m + 3.0) * c * pmm;
    if (L == m + 1) return pm1;
    double pm2 = pmm;
    double p = 0.0;
    for (int k = m + 2; k <= L; ++k) {
        double kk = static_cast<double>(k);
        double a = std::sqrt((4.0 * kk * kk - 1.0) / (kk * kk - m * m));
        double b = std::sqrt(((kk - 1.0) * (kk - 1.0) - m * m) / (4.0 * (kk - 1.0) * (kk - 1.0) - 1.0));
        p = a * (c * pm1 - b * pm2);
        pm2 = pm1;
        pm1 = p;
    }
    return p;
}

Complex sphere2_Y(int L, int m, double theta, double phi) {
    int am = std::abs(m);
    double p = assoc_legendre_norm(L, am, std::cos(theta), std::sin(theta));
    Complex e{std::cos(am * phi), std::sin(am * phi)};
    Complex y = p * e;
    if (m < 0) {
        y = std::conj(y);
        if (am & 1) y = -y;
    }
    return y;
}

Complex sphere2_Y_vec(int L, int m, const std::vector<double>& u) {
    double theta = std::acos(std::clamp(u[2], -1.0, 1.0));
    double phi = std::atan2(u[1], u[0]);
    return sphere2_Y(L, m, theta, phi);
}

// Normalization of the S^3 tower harmonic built on C_{L-l}^{l+1}(cos chi):
//   N^2 = 2^{2l+1} (L+1) (L-l)! (l!)^2 / (pi (L+l+1)!).
double sphere3_norm(int L, int l) {
    double lg = (2.0 * l + 1.0) * std::log(2.0) + std::log(static_cast<double>(L + 1)) +
                std::lgamma(static_cast<double>(L - l) + 1.0) +
                2.0 * std::lgamma(static_cast<double>(l) + 1.0) - std::log(kPi) -
                std::lgamma(static_cast<double>(L + l) + 2.0);
    return std::exp(0.5 * lg);
}

}  // namespace

void validate_harmonic_index(int d, const HarmonicIndex& idx) {
    if (idx.L < 0) throw InvalidParameter("HarmonicIndex: L must be >= 0");
    if (static_cast<int>(idx.chain.size()) != d - 2)
        throw InvalidParameter("HarmonicIndex: chain length must be d - 2");
    if (d == 3) {
        if (std::abs(idx.chain[0]) > idx.L)
            throw InvalidParameter("HarmonicIndex: requires |m| <= L");
    } else if (d == 4) {
        if (idx.chain[0] < 0 || idx.chain[0] > idx.L || std::abs(idx.chain[1]) > idx.chain[0])
            throw InvalidParameter("HarmonicIndex: requires L >= l1 >= |l2|");
    } else {
        int prev = idx.L;
        for (std::size_t i = 0; i + 1 < idx.chain.size(); ++i) {
            if (idx.chain[i] < 0 || idx.chain[i] > prev)
                throw InvalidParameter("HarmonicIndex: chain must be non-increasing");
            prev = idx.chain[i];
        }
        if (!idx.chain.empty() && std::abs(idx.chain.back()) > prev)
            throw InvalidParameter("HarmonicIndex: requires |last| <= previous");
    }
}

int harmonic_count(int d, int L) {
    if (d == 3) return 2 * L + 1;
    if (d == 4) return (L + 1) * (L + 1);
    throw UnsupportedDimension("harmonic_count: implemented for d in {3, 4}");
}

std::vector<HarmonicIndex> harmonic_indices_degree(int d, int L) {
    if (d != 3 && d != 4)
        throw UnsupportedDimension("harmonic_indices: implemented for d in {3, 4}");
    std::vector<HarmonicIndex> out;
    if (d == 3) {
        for (int m = -L; m <= L; ++m) out.push_back({L, {m}});
    } else {
        for (int l1 = 0; l1 <= L; ++l1)
            for (int l2 = -l1; l2 <= l1; ++l2) out.push_back({L, {l1, l2}});
    }
    return out;
}

std::vector<HarmonicIndex> harmonic_indices(int d, int Lmax) {
    std::vector<HarmonicIndex> out;
    for (int L = 0; L <= Lmax; ++L) {
        auto deg = harmonic_indices_degree(d, L);
        out.insert(out.end(), deg.begin(), deg.end());
    }
    return out;
}

Complex hyperspherical_Y(int d, const HarmonicIndex& idx, const std::vector<double>& u) {
    validate_harmonic_index(d, idx);
    check_unit(u, d);
    if (d == 3) return sphere2_Y_vec(idx.L, idx.chain[0], u);
    if (d != 4)
        throw UnsupportedDimension("hyperspherical_Y: implemented for d in {3, 4}");

    int L = idx.L, l1 = idx.chain[0], l2 = idx.chain[1];
    double cchi = std::clamp(u[3], -1.0, 1.0);
    double schi = std::sqrt(std::max(0.0, 1.0 - cchi * cchi));
    double radial = sphere3_norm(L, l1) * std::pow(schi, l1) *
                    gegenbauer(L - l1, static_cast<double>(l1 + 1), cchi).real();
    if (schi < 1e-15) {
        // At the poles only l1 = 0 survives; the S^2 factor is the constant.
        if (l1 > 0) return 0.0;
        return radial * std::sqrt(1.0 / (4.0 * kPi));
    }
    std::vector<double> omega{u[0] / schi, u[1] / schi, u[2] / schi};
    return radial * sphere2_Y_vec(l1, l2, omega);
}

}  // namespace dsholo
