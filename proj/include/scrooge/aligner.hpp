#pragma once

#include <cstdint>
#include <optional>

#include "scrooge/cigar.hpp"
#include "scrooge/dp.hpp"
#include "scrooge/traceback.hpp"

namespace scrooge {

struct AlignerConfig {
    int W = 64;  // window size, characters
    int O = 33;  // window overlap, characters
    bool sene = true;
    bool dent = true;
    bool early_termination = true;

    enum class Mode { Windowed, SingleWindow };
    Mode mode = Mode::Windowed;
    int k_single = BitVector::kMaxBits;  // edit budget in SingleWindow mode

    // Throws ConfigError on invalid combinations.
    void validate() const;

    StoragePolicy storage_policy() const {
        if (dent) return StoragePolicy::DentTrimmed;
        if (sene) return StoragePolicy::SeneEntries;
        return StoragePolicy::BaselineEdges;
    }
};

struct AlignmentResult {
    std::int64_t distance = 0;
    Cigar cigar;
    int windows = 0;
    InstrumentationCounters counters;
};

// Full pairwise alignment via the greedy windowing heuristic: align W-sized
// prefixes, commit the first W-O transcript steps, advance each sequence by
// what those steps consumed, repeat; the final window (both remainders <= W)
// is traced back in full. The reported distance is an upper bound on the
// true edit distance.
AlignmentResult align(CodeView text, CodeView pattern, const AlignerConfig& config, Workspace& ws);

// Exact single-table alignment for sequences up to kMaxBits characters.
// Returns std::nullopt when the distance exceeds k.
std::optional<AlignmentResult> align_single_window(CodeView text, CodeView pattern, int k,
                                                   const AlignerConfig& config, Workspace& ws);

}  // namespace scrooge
