#pragma once

#include <cstdint>

namespace landau {

// splitmix64, used only to spread a user seed into a well-mixed xorshift state.
//   z  = (s += 0x9E3779B97F4A7C15)
//   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
//   z ^= z >> 27;  z *= 0x94D049BB133111EB
//   return z ^ (z >> 31)
struct splitmix64 {
    std::uint64_t state;
    explicit splitmix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// xorshift64* with the standard multiplier:
//   x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;  output x * 0x2545F4914F6CDD1D
// State must never be zero; the constructor reseeds through splitmix64, which
// maps any user seed (including 0) to a nonzero state with overwhelming
// probability, and we guard the remaining case explicitly.
struct xorshift64star {
    std::uint64_t state;

    explicit xorshift64star(std::uint64_t seed) {
        state = splitmix64(seed).next();
        if (state == 0) state = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next() {
        std::uint64_t x = state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    // Uniform on [0,1): top 53 bits scaled by 2^-53.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform on [-a, a].
    double next_symmetric(double a) { return a * (2.0 * next_unit() - 1.0); }
};

}  // namespace landau
