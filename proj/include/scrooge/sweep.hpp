#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scrooge/batch.hpp"
#include "scrooge/oracle.hpp"

namespace scrooge {

struct ImprovementCombo {
    bool sene = false;
    bool dent = false;
    bool et = false;
};

// O selection rule for a sweep: the paper-style W/2 + 1, or one fixed value.
struct OverlapRule {
    enum class Kind { HalfPlusOne, Fixed } kind = Kind::HalfPlusOne;
    int fixed = 0;

    int overlap_for(int W) const { return kind == Kind::HalfPlusOne ? W / 2 + 1 : fixed; }
};

struct SweepOptions {
    std::vector<int> W_list;
    OverlapRule o_rule;
    std::vector<ImprovementCombo> combos;
    oracle::ScoringParams scoring;
    int threads = 1;
    // When false, the pairs_per_s column is written as 0 so that repeated
    // runs produce byte-identical reports.
    bool measure_time = true;
};

struct SweepRow {
    int W = 0, O = 0;
    bool sene = false, dent = false, et = false;
    // Nearest-rank "p-th worst" alignment scores over the dataset.
    std::int64_t q500 = 0, q100 = 0, q010 = 0, q001 = 0;
    double frac_optimal = 0.0;
    double mean_rows_frac = 0.0;
    double stored_bits_ratio = 0.0;
    double pairs_per_s = 0.0;
    std::int64_t oracle_q500 = 0, oracle_q100 = 0, oracle_q010 = 0, oracle_q001 = 0;
};

struct SweepReport {
    std::vector<SweepRow> rows;
};

// Nearest-rank quantile in "p-th worst" form: for a dataset of N scores,
// p = 0.01 selects the ceil(0.01 * N)-th worst score.
std::int64_t worst_quantile(std::vector<std::int64_t> scores, double p);

SweepReport run_sweep(const std::vector<SeqPairRecord>& pairs, const SweepOptions& options);

// CSV with the fixed column set
// W,O,sene,dent,et,q500,q100,q010,q001,frac_optimal,mean_rows_frac,
// stored_bits_ratio,pairs_per_s followed by the oracle comparison columns.
std::string sweep_csv(const SweepReport& report);

}  // namespace scrooge
