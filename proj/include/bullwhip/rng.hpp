#pragma once

#include <cstdint>

namespace bullwhip {

/// splitmix64 stream. Small state, trivially seedable, and independent
/// streams come from distinct seeds, which is all replication needs.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    friend bool operator==(const SplitMix64&, const SplitMix64&) = default;
};

/// Poisson draw by inversion (sequential search). Exact for the small rates
/// used here; cost grows linearly with lambda.
std::int64_t poisson_sample(SplitMix64& rng, double lambda);

}  // namespace bullwhip
