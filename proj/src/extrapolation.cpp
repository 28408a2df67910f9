#include "dsholo/extrapolation.hpp"

#include <cmath>

#include "dsholo/errors.hpp"

namespace dsholo {

RichardsonResult richardson_extrapolate(const std::vector<Complex>& values,
                                        const std::vector<double>& nodes,
                                        const std::vector<Complex>& exponents) {
    if (values.size() != nodes.size())
        throw InvalidParameter("richardson_extrapolate: values/nodes size mismatch");
    if (values.size() < 2)
        throw InvalidParameter("richardson_extrapolate: need at least two nodes");
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k)
        if (!(nodes[k] > nodes[k + 1]) || !(nodes[k + 1] > 0.0))
            throw InvalidParameter(
                "richardson_extrapolate: nodes must be strictly decreasing and positive");

    std::vector<Complex> v = values;
    std::vector<double> h = nodes;
    RichardsonResult result;
    Complex previous = v.back();
    std::size_t stages = std::min(exponents.size(), values.size() - 1);
    for (std::size_t s = 0; s < stages; ++s) {
        Complex p = exponents[s];
        std::vector<Complex> next(v.size() - 1);
        for (std::size_t k = 0; k + 1 < v.size(); ++k) {
            Complex hk = std::exp(p * std::log(h[k]));
            Complex hk1 = std::exp(p * std::log(h[k + 1]));
            next[k] = (hk * v[k + 1] - hk1 * v[k]) / (hk - hk1);
        }
        previous = v.back();
        v = std::move(next);
        h.erase(h.begin());
        ++result.order;
    }
    result.value = v.back();
    double scale = std::max(std::abs(result.value), 1e-300);
    result.stabilization = std::abs(result.value - previous) / scale;
    return result;
}

std::vector<Complex> boundary_exponent_ladder(double nu, int length) {
    // Alternate the oscillatory family delta^(m - 2 i nu) with the integer
    // powers delta^(m+1): {-2 i nu, 1, 1 - 2 i nu, 2, 2 - 2 i nu, ...}.
    std::vector<Complex> ladder;
    ladder.reserve(length);
    int m = 0;
    while (static_cast<int>(ladder.size()) < length) {
        ladder.push_back(Complex{static_cast<double>(m), -2.0 * nu});
        if (static_cast<int>(ladder.size()) == length) break;
        ladder.push_back(Complex{static_cast<double>(m + 1), 0.0});
        ++m;
    }
    return ladder;
}

}  // namespace dsholo
