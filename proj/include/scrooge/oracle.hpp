#pragma once

#include <cstdint>
#include <vector>

#include "scrooge/cigar.hpp"
#include "scrooge/sequence.hpp"

// Exact reference implementations used for verification and accuracy
// evaluation. Plain quadratic dynamic programming throughout; none of this
// runs on the alignment hot path.
namespace scrooge::oracle {

struct ScoringParams {
    int match_bonus = 2;
    int mismatch_penalty = 4;
    int gap_open = 4;
    int gap_extend = 2;
};

// Exact minimal edit count (unit-cost substitutions, insertions, deletions).
int levenshtein(CodeView text, CodeView pattern);

// d[i][j] = exact edit distance between text[i:] and pattern[j:].
// Intended for test-scale inputs; allocates (n+1) x (m+1) ints.
std::vector<std::vector<int>> suffix_distance_table(CodeView text, CodeView pattern);

struct GlobalAlignment {
    int distance = 0;
    Cigar cigar;
};

// Optimal unit-cost global alignment with traceback. Guarded against
// accidental use on inputs large enough to exhaust memory.
GlobalAlignment global_align(CodeView text, CodeView pattern);

// Affine gap score of a replay-valid CIGAR:
//   match_bonus * (#=) - mismatch_penalty * (#X)
//   - sum over maximal I/D runs of (gap_open + gap_extend * run length).
std::int64_t score_cigar(const Cigar& cigar, const ScoringParams& params);

}  // namespace scrooge::oracle
