#pragma once

#include <cstdint>

namespace scrooge {

// SplitMix64 (Steele, Lea & Flood). Used everywhere randomness is needed so
// that results replicate bit-for-bit across platforms and standard library
// versions; platform default generators are deliberately not used.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Plain modulo; the bias is negligible for the small
    // ranges used here and keeps the sequence trivially reproducible.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace scrooge
