#pragma once

#include <cstdint>

namespace hamres {

// SplitMix64 (Vigna). Small state, full 64-bit period, and cheap to split:
// every experiment derives per-trial / per-vertex child seeds with
// derive_seed so results do not depend on scheduling or trial count.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound), bound >= 1, rejection-sampled to avoid modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

  private:
    std::uint64_t state_;
};

// Documented seed-derivation hash: trial i of a run with master seed s uses
// derive_seed(s, i). Mixing through SplitMix64 twice keeps child streams
// decorrelated even for adjacent indices.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 mix(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    mix.next();
    return mix.next();
}

} // namespace hamres
