#include "dsholo/sphere_grid.hpp"

#include <cmath>

#include "dsholo/errors.hpp"

namespace dsholo {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

namespace detail {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    // Newton iteration on P_n from the standard asymptotic initial guess;
    // symmetric pairs are filled together.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // One clean-up evaluation of P_n' at the converged node.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
}

void gauss_chebyshev2(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int k = 1; k <= n; ++k) {
        double a = kPi * k / (n + 1.0);
        nodes[k - 1] = std::cos(a);
        weights[k - 1] = kPi / (n + 1.0) * std::sin(a) * std::sin(a);
    }
}

}  // namespace detail

SphereGrid build_sphere_grid(int d, int exactness_degree) {
    if (d != 3 && d != 4)
        throw UnsupportedDimension("build_sphere_grid: implemented for d in {3, 4}");
    if (exactness_degree < 0)
        throw InvalidParameter("build_sphere_grid: exactness_degree must be >= 0");

    int p = exactness_degree;
    SphereGrid grid;
    grid.d = d;
    grid.exactness_degree = p;

    // S^2 factor: Gauss-Legendre in cos(theta) x uniform azimuth.
    int n_theta = p / 2 + 1;
    int n_phi = p + 1;
    std::vector<double> tn, tw;
    detail::gauss_legendre(n_theta, tn, tw);
    double wphi = 2.0 * kPi / n_phi;

    if (d == 3) {
        grid.nodes.reserve(3 * static_cast<std::size_t>(n_theta) * n_phi);
        grid.weights.reserve(static_cast<std::size_t>(n_theta) * n_phi);
        for (int i = 0; i < n_theta; ++i) {
            double c = tn[i];
            double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            for (int j = 0; j < n_phi; ++j) {
                double phi = wphi * j;
                grid.nodes.push_back(s * std::cos(phi));
                grid.nodes.push_back(s * std::sin(phi));
                grid.nodes.push_back(c);
                grid.weights.push_back(tw[i] * wphi);
            }
        }
        return grid;
    }

    // S^3: Gauss-Chebyshev (2nd kind) in cos(chi) x the S^2 rule.
    int n_chi = (p + 2) / 2;
    std::vector<double> cn, cw;
    detail::gauss_chebyshev2(n_chi, cn, cw);
    grid.nodes.reserve(4 * static_cast<std::size_t>(n_chi) * n_theta * n_phi);
    grid.weights.reserve(static_cast<std::size_t>(n_chi) * n_theta * n_phi);
    for (int k = 0; k < n_chi; ++k) {
        double cc = cn[k];
        double sc = std::sqrt(std::max(0.0, 1.0 - cc * cc));
        for (int i = 0; i < n_theta; ++i) {
            double c = tn[i];
            double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            for (int j = 0; j < n_phi; ++j) {
                double phi = wphi * j;
                grid.nodes.push_back(sc * s * std::cos(phi));
                grid.nodes.push_back(sc * s * std::sin(phi));
                grid.nodes.push_back(sc * c);
                grid.nodes.push_back(cc);
                grid.weights.push_back(cw[k] * tw[i] * wphi);
            }
        }
    }
    return grid;
}

}  // namespace dsholo
