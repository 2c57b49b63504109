#pragma once

#include <cstdint>

namespace pursuit {

// SplitMix64. Chosen over std::mt19937_64 + distributions because the whole
// stream, including bounded draws, must be bit-reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound), bound > 0. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

private:
    std::uint64_t state_;
};

}  // namespace pursuit
