#if defined(__x86_64__)

#include <immintrin.h>

#include "dsholo/reduce.hpp"

namespace dsholo::detail {

// Leaf kernels only: the pairwise tree lives in reduce.cpp and is shared
// with the scalar path.  Compiled via target attributes so the translation
// unit needs no special flags; only dispatched to when the CPU supports
// AVX2 + FMA.

__attribute__((target("avx2,fma")))
Complex dot_leaf_avx2(const Complex* a, const Complex* b, const double* w, std::size_t n) {
    __m256d acc_t = _mm256_setzero_pd();  // even/odd lanes: w ar br, w ai bi
    __m256d acc_s = _mm256_setzero_pd();  // even/odd lanes: w ar bi, w ai br
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
        __m256d vb = _mm256_loadu_pd(reinterpret_cast<const double*>(b + i));
        __m256d vw = _mm256_permute4x64_pd(
            _mm256_castpd128_pd256(_mm_loadu_pd(w + i)), 0x50);  // [w0 w0 w1 w1]
        acc_t = _mm256_fmadd_pd(vw, _mm256_mul_pd(va, vb), acc_t);
        __m256d vbs = _mm256_permute_pd(vb, 0x5);  // swap re/im per complex
        acc_s = _mm256_fmadd_pd(vw, _mm256_mul_pd(va, vbs), acc_s);
    }
    alignas(32) double t[4], s[4];
    _mm256_store_pd(t, acc_t);
    _mm256_store_pd(s, acc_s);
    // conj(a) b = (ar br + ai bi) + i (ar bi - ai br)
    double re = (t[0] + t[2]) + (t[1] + t[3]);
    double im = (s[0] + s[2]) - (s[1] + s[3]);
    for (; i < n; ++i) {
        double ar = a[i].real(), ai = a[i].imag();
        double br = b[i].real(), bi = b[i].imag();
        re += w[i] * (ar * br + ai * bi);
        im += w[i] * (ar * bi - ai * br);
    }
    return {re, im};
}

__attribute__((target("avx2,fma")))
Complex sum_leaf_avx2(const Complex* v, const double* w, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vv = _mm256_loadu_pd(reinterpret_cast<const double*>(v + i));
        __m256d vw = _mm256_permute4x64_pd(
            _mm256_castpd128_pd256(_mm_loadu_pd(w + i)), 0x50);
        acc = _mm256_fmadd_pd(vw, vv, acc);
    }
    alignas(32) double t[4];
    _mm256_store_pd(t, acc);
    double re = t[0] + t[2];
    double im = t[1] + t[3];
    for (; i < n; ++i) {
        re += w[i] * v[i].real();
        im += w[i] * v[i].imag();
    }
    return {re, im};
}

}  // namespace dsholo::detail

#endif  // __x86_64__
