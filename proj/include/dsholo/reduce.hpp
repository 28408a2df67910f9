#pragma once

#include <complex>
#include <cstddef>

namespace dsholo {

using Complex = std::complex<double>;

// Weighted sesquilinear reduction sum_i w_i conj(a_i) b_i with a fixed
// blocked-pairwise summation order, identical across the scalar and SIMD
// kernels so results are bit-stable on a given machine.  The active kernel
// is chosen once at startup (AVX2 when the CPU supports it).
Complex weighted_dot(const Complex* a, const Complex* b, const double* w, std::size_t n);

// Weighted linear reduction sum_i w_i v_i (no conjugation).
Complex weighted_sum(const Complex* v, const double* w, std::size_t n);

namespace detail {

Complex weighted_dot_scalar(const Complex* a, const Complex* b, const double* w, std::size_t n);
Complex weighted_sum_scalar(const Complex* v, const double* w, std::size_t n);
#if defined(__x86_64__)
Complex weighted_dot_avx2(const Complex* a, const Complex* b, const double* w, std::size_t n);
Complex weighted_sum_avx2(const Complex* v, const double* w, std::size_t n);
#endif

// Which kernel weighted_dot dispatches to, for tests and reports.
bool using_avx2();

}  // namespace detail

}  // namespace dsholo
