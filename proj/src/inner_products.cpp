#include "dsholo/inner_products.hpp"

#include <cmath>

#include "dsholo/errors.hpp"
#include "dsholo/harmonics.hpp"
#include "dsholo/modes.hpp"
#include "dsholo/reduce.hpp"

namespace dsholo {

namespace {

void check_sizes(std::size_t a, std::size_t b, const SphereGrid& grid) {
    if (a != grid.size() || b != grid.size())
        throw GridMismatch("inner product: tabulated values do not match the grid");
}

}  // namespace

std::vector<Complex> tabulate(const BoundaryFn& f, const SphereGrid& grid) {
    std::vector<Complex> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f(grid.node_vec(i));
    return vals;
}

Complex l2_inner(const std::vector<Complex>& f, const std::vector<Complex>& g,
                 const SphereGrid& grid) {
    check_sizes(f.size(), g.size(), grid);
    return weighted_dot(f.data(), g.data(), grid.weights.data(), grid.size());
}

Complex l2_inner(const BoundaryFn& f, const BoundaryFn& g, const SphereGrid& grid) {
    return l2_inner(tabulate(f, grid), tabulate(g, grid), grid);
}

Complex kg_inner(const std::vector<Complex>& f, const std::vector<Complex>& df,
                 const std::vector<Complex>& g, const std::vector<Complex>& dg,
                 const PrincipalParams& params, const SphereGrid& grid) {
    check_sizes(f.size(), g.size(), grid);
    check_sizes(df.size(), dg.size(), grid);
    if (grid.d != params.d) throw GridMismatch("kg_inner: grid dimension mismatch");
    Complex bracket = weighted_dot(f.data(), dg.data(), grid.weights.data(), grid.size()) -
                      std::conj(weighted_dot(g.data(), df.data(), grid.weights.data(), grid.size()));
    return Complex{0.0, 1.0} * kg_normalization(params) * bracket;
}

GramResult kg_norm_check(const PrincipalParams& params, int Lmax, const SphereGrid& grid) {
    if (grid.d != params.d) throw GridMismatch("kg_norm_check: grid dimension mismatch");
    auto indices = harmonic_indices(params.d, Lmax);
    GramResult result;
    result.n_modes = static_cast<int>(indices.size());
    result.under_resolved = grid.exactness_degree < 2 * Lmax;

    // Slice tabulation: the mode factorizes into a radial constant (per L)
    // times the harmonic, but values are assembled per mode and the Gram is
    // integrated numerically as stated, not via the factorization.
    std::vector<Complex> radial(Lmax + 1), dradial(Lmax + 1);
    for (int L = 0; L <= Lmax; ++L) {
        radial[L] = mode_radial(params, L, 0.0, 0.0);
        dradial[L] = mode_radial_drho(params, L, 0.0, 0.0);
    }
    std::vector<std::vector<Complex>> vals(indices.size()), dvals(indices.size());
    for (std::size_t m = 0; m < indices.size(); ++m) {
        vals[m].resize(grid.size());
        dvals[m].resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            Complex y = hyperspherical_Y(params.d, indices[m], grid.node_vec(i));
            vals[m][i] = radial[indices[m].L] * y;
            dvals[m][i] = dradial[indices[m].L] * y;
        }
    }
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = 0; j < indices.size(); ++j) {
            Complex gram = kg_inner(vals[i], dvals[i], vals[j], dvals[j], params, grid);
            double dev = std::abs(gram - (i == j ? 1.0 : 0.0));
            result.max_deviation = std::max(result.max_deviation, dev);
        }
    }
    return result;
}

GramResult harmonic_gram_check(int d, int Lmax, const SphereGrid& grid) {
    if (grid.d != d) throw GridMismatch("harmonic_gram_check: grid dimension mismatch");
    auto indices = harmonic_indices(d, Lmax);
    GramResult result;
    result.n_modes = static_cast<int>(indices.size());
    result.under_resolved = grid.exactness_degree < 2 * Lmax;

    std::vector<std::vector<Complex>> vals(indices.size());
    for (std::size_t m = 0; m < indices.size(); ++m) {
        vals[m].resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            vals[m][i] = hyperspherical_Y(d, indices[m], grid.node_vec(i));
    }
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Complex gram = l2_inner(vals[i], vals[j], grid);
            double dev = std::abs(gram - (i == j ? 1.0 : 0.0));
            result.max_deviation = std::max(result.max_deviation, dev);
        }
    }
    return result;
}

}  // namespace dsholo
