#include "dsholo/reduce.hpp"

namespace dsholo {

namespace detail {

namespace {

// Leaf size of the blocked-pairwise summation tree.  The recursion shape is
// fixed (independent of kernel), so each kernel's result is reproducible
// run-to-run; scalar and SIMD kernels agree to ~1e-15 relative.
constexpr std::size_t kBlock = 256;

Complex dot_leaf_scalar(const Complex* a, const Complex* b, const double* w, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double ar = a[i].real(), ai = a[i].imag();
        double br = b[i].real(), bi = b[i].imag();
        re += w[i] * (ar * br + ai * bi);
        im += w[i] * (ar * bi - ai * br);
    }
    return {re, im};
}

Complex sum_leaf_scalar(const Complex* v, const double* w, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += w[i] * v[i].real();
        im += w[i] * v[i].imag();
    }
    return {re, im};
}

// Split at the largest block-aligned midpoint; both kernels share the tree.
std::size_t split_point(std::size_t n) {
    std::size_t half = (n / 2 + kBlock - 1) / kBlock * kBlock;
    return half < n ? half : n - 1;
}

template <typename Leaf>
Complex pairwise_dot(const Complex* a, const Complex* b, const double* w, std::size_t n,
                     Leaf leaf) {
    if (n <= kBlock) return leaf(a, b, w, n);
    std::size_t h = split_point(n);
    return pairwise_dot(a, b, w, h, leaf) + pairwise_dot(a + h, b + h, w + h, n - h, leaf);
}

template <typename Leaf>
Complex pairwise_sum(const Complex* v, const double* w, std::size_t n, Leaf leaf) {
    if (n <= kBlock) return leaf(v, w, n);
    std::size_t h = split_point(n);
    return pairwise_sum(v, w, h, leaf) + pairwise_sum(v + h, w + h, n - h, leaf);
}

}  // namespace

Complex weighted_dot_scalar(const Complex* a, const Complex* b, const double* w, std::size_t n) {
    return pairwise_dot(a, b, w, n, dot_leaf_scalar);
}

Complex weighted_sum_scalar(const Complex* v, const double* w, std::size_t n) {
    return pairwise_sum(v, w, n, sum_leaf_scalar);
}

#if defined(__x86_64__)

Complex dot_leaf_avx2(const Complex* a, const Complex* b, const double* w, std::size_t n);
Complex sum_leaf_avx2(const Complex* v, const double* w, std::size_t n);

Complex weighted_dot_avx2(const Complex* a, const Complex* b, const double* w, std::size_t n) {
    return pairwise_dot(a, b, w, n, dot_leaf_avx2);
}

Complex weighted_sum_avx2(const Complex* v, const double* w, std::size_t n) {
    return pairwise_sum(v, w, n, sum_leaf_avx2);
}

bool using_avx2() {
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
}

#else

bool using_avx2() { return false; }

#endif

}  // namespace detail

Complex weighted_dot(const Complex* a, const Complex* b, const double* w, std::size_t n) {
#if defined(__x86_64__)
    if (detail::using_avx2()) return detail::weighted_dot_avx2(a, b, w, n);
#endif
    return detail::weighted_dot_scalar(a, b, w, n);
}

Complex weighted_sum(const Complex* v, const double* w, std::size_t n) {
#if defined(__x86_64__)
    if (detail::using_avx2()) return detail::weighted_sum_avx2(v, w, n);
#endif
    return detail::weighted_sum_scalar(v, w, n);
}

}  // namespace dsholo
