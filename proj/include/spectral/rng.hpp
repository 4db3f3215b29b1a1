#pragma once

#include <cstdint>

namespace spectral {

// splitmix64: the fixed 64-bit generator used for all randomized pieces
// (instance generation, random seed pools, test harnesses) so runs are
// reproducible across platforms from a single integer seed.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on (0,1): 53-bit mantissa, zero mapped to the next draw.
    double uniform01() {
        for (;;) {
            const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
            if (u > 0.0) return u;
        }
    }

    // Uniform integer in [0, bound).
    uint64_t below(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

} // namespace spectral
