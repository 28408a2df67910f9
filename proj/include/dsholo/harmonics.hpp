#pragma once

#include <complex>
#include <vector>

#include "dsholo/gamma.hpp"

namespace dsholo {

// Multi-index of a hyperspherical harmonic on S^(d-1): principal degree L
// plus a chain of d-2 subsidiary labels, L >= l_1 >= ... >= |l_(d-2)|.
struct HarmonicIndex {
    int L = 0;
    std::vector<int> chain;
};

// Throws InvalidParameter if the chain length or ordering is wrong for d.
void validate_harmonic_index(int d, const HarmonicIndex& idx);

// Number of harmonics of degree L on S^(d-1): 2L+1 for d=3, (L+1)^2 for d=4.
int harmonic_count(int d, int L);

// All indices with degree <= Lmax, ordered by L ascending then chain
// lexicographic.  The ordering is part of the report/Gram contract.
std::vector<HarmonicIndex> harmonic_indices(int d, int Lmax);

// The degree-L indices only, in the same chain order.
std::vector<HarmonicIndex> harmonic_indices_degree(int d, int L);

// Orthonormal complex hyperspherical harmonic on S^(d-1) against the
// invariant measure; Condon-Shortley phases on the S^2 factor.  d in {3,4};
// throws UnsupportedDimension otherwise, InvalidParameter for non-unit u.
Complex hyperspherical_Y(int d, const HarmonicIndex& idx, const std::vector<double>& u);

}  // namespace dsholo
