#pragma once

#include <cstdint>

namespace seu {

// SplitMix64. Every randomized code path in the toolkit draws from this
// generator so that runs are reproducible bit-for-bit across platforms and
// thread counts; results never depend on std:: distribution internals.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, bound), bound >= 1. Rejection sampling, unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = -bound % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    bool coin() { return (next() & 1u) != 0; }

    // True with probability p (p in [0,1]), using a 53-bit integer compare.
    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        const auto cut = static_cast<std::uint64_t>(p * 9007199254740992.0); // p * 2^53
        return (next() >> 11) < cut;
    }

private:
    std::uint64_t state_;
};

// Decorrelates (seed, index) pairs into an independent stream seed. Used to
// give every enumeration index its own generator so parallel and serial
// sweeps see identical populations.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    return g.next();
}

} // namespace seu
