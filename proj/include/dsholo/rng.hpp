#pragma once

#include <cstdint>
#include <vector>

namespace dsholo {

// Deterministic cross-platform generator (splitmix64); the standard-library
// distributions are implementation-defined, which would break byte-stable
// seeded reports.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller.
    double next_normal();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Uniform point on S^(d-1) (normalized Gaussian vector).
std::vector<double> random_unit_vector(int d, SplitMix64& rng);

// Uniform in (-bound, bound).
double random_symmetric(double bound, SplitMix64& rng);

}  // namespace dsholo
