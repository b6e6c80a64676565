#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "scrooge/aligner.hpp"
#include "scrooge/io.hpp"

namespace scrooge {

// Outcome for one pair. In single-window mode a distance above k leaves
// found == false, distance == -1 and cigar == "*".
struct PairOutcome {
    bool found = true;
    std::int64_t distance = -1;
    Cigar cigar;
    int windows = 0;
    InstrumentationCounters counters;
};

struct BatchResult {
    std::vector<PairOutcome> outcomes;  // input order
    InstrumentationCounters total;
    double align_seconds = 0.0;   // alignment phase only, excludes ingestion
    double pairs_per_second = 0.0;
};

// Aligns every pair with a pool of `threads` workers, one workspace each.
// Results are collected by input index, so output is independent of thread
// count and scheduling. A worker error aborts the batch with a diagnostic
// naming the pair id.
BatchResult run_batch(const std::vector<SeqPairRecord>& pairs, const AlignerConfig& config,
                      int threads);

// Per-pair `id<TAB>distance<TAB>cigar` lines.
void write_batch_tsv(std::ostream& os, const std::vector<SeqPairRecord>& pairs,
                     const BatchResult& result);

}  // namespace scrooge
