#pragma once

#include <cstdint>
#include <vector>

#include "scrooge/cigar.hpp"
#include "scrooge/io.hpp"

namespace scrooge {

// Fractions of error events that are substitutions, insertions, deletions.
struct ErrorMix {
    double sub = 1.0 / 3;
    double ins = 1.0 / 3;
    double del = 1.0 / 3;
};

struct SimulatedPair {
    SeqPairRecord rec;
    Cigar ground_truth;  // transforms rec.text into rec.pattern
};

// Draws `count` uniform ACGT texts of the given length and mutates each into
// a pattern with independent per-position errors: each text position incurs
// one error event with probability error_rate, split by the mix.
// Substitutions replace the base with a different one; insertions place a
// random base before the position (the original base is still copied);
// deletions drop the position. Fully deterministic for a fixed seed (see
// rng.hpp). Fractions must sum to 1 and 0 <= error_rate < 1.
std::vector<SimulatedPair> simulate_pairs(int count, int length, double error_rate,
                                          const ErrorMix& mix, std::uint64_t seed);

}  // namespace scrooge
