#pragma once

#include <cstddef>
#include <vector>

namespace dsholo {

// Product quadrature rule on S^(d-1) integrating all spherical polynomials of
// total degree <= exactness_degree exactly.  Nodes are stored flattened,
// d doubles per node.
struct SphereGrid {
    int d = 0;
    int exactness_degree = 0;
    std::vector<double> nodes;    // size d * size()
    std::vector<double> weights;  // size size()

    std::size_t size() const { return weights.size(); }
    const double* node(std::size_t i) const { return nodes.data() + static_cast<std::size_t>(d) * i; }
    std::vector<double> node_vec(std::size_t i) const {
        return std::vector<double>(node(i), node(i) + d);
    }
};

// d = 3: Gauss-Legendre in cos(theta) x uniform azimuth.
// d = 4: Gauss-Chebyshev (second kind) in cos(chi) x the d = 3 rule.
// Throws UnsupportedDimension for other d.
SphereGrid build_sphere_grid(int d, int exactness_degree);

namespace detail {

// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// n-point Gauss-Chebyshev rule of the second kind on [-1, 1] with weight
// sqrt(1 - t^2): t_k = cos(k pi/(n+1)), w_k = pi/(n+1) sin^2(k pi/(n+1)).
void gauss_chebyshev2(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace detail

}  // namespace dsholo
