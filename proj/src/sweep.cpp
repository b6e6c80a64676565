#include "scrooge/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "scrooge/errors.hpp"

namespace scrooge {

std::int64_t worst_quantile(std::vector<std::int64_t> scores, double p) {
    if (scores.empty()) throw InputError("quantile of an empty score list");
    if (!(p > 0.0 && p <= 1.0)) throw InputError("quantile fraction must lie in (0, 1]");
    std::sort(scores.begin(), scores.end());  // ascending = worst first
    const std::size_t n = scores.size();
    std::size_t rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
    rank = std::min(std::max<std::size_t>(rank, 1), n);
    return scores[rank - 1];
}

namespace {

struct QuantileSet {
    std::int64_t q500, q100, q010, q001;
};

QuantileSet quantiles(const std::vector<std::int64_t>& scores) {
    return {worst_quantile(scores, 0.5), worst_quantile(scores, 0.1),
            worst_quantile(scores, 0.01), worst_quantile(scores, 0.001)};
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

SweepReport run_sweep(const std::vector<SeqPairRecord>& pairs, const SweepOptions& options) {
    if (pairs.empty()) throw InputError("sweep: empty dataset");
    if (options.W_list.empty()) throw InputError("sweep: empty W list");
    if (options.combos.empty()) throw InputError("sweep: no improvement combinations");

    // Oracle baseline, computed once per pair.
    std::vector<std::int64_t> oracle_dist(pairs.size());
    std::vector<std::int64_t> oracle_scores(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const CodeSeq text = encode_sequence(pairs[i].text);
        const CodeSeq pattern = encode_sequence(pairs[i].pattern);
        const oracle::GlobalAlignment ga = oracle::global_align(text, pattern);
        oracle_dist[i] = ga.distance;
        oracle_scores[i] = oracle::score_cigar(ga.cigar, options.scoring);
    }
    const QuantileSet oq = quantiles(oracle_scores);

    SweepReport report;
    for (int W : options.W_list) {
        const int O = options.o_rule.overlap_for(W);
        for (const ImprovementCombo& combo : options.combos) {
            AlignerConfig cfg;
            cfg.W = W;
            cfg.O = O;
            cfg.sene = combo.sene;
            cfg.dent = combo.dent;
            cfg.early_termination = combo.et;
            cfg.validate();

            const BatchResult br = run_batch(pairs, cfg, options.threads);

            std::vector<std::int64_t> scores(pairs.size());
            std::size_t optimal = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                scores[i] = oracle::score_cigar(br.outcomes[i].cigar, options.scoring);
                if (br.outcomes[i].distance == oracle_dist[i]) ++optimal;
            }
            const QuantileSet q = quantiles(scores);

            SweepRow row;
            row.W = W;
            row.O = O;
            row.sene = combo.sene;
            row.dent = combo.dent;
            row.et = combo.et;
            row.q500 = q.q500;
            row.q100 = q.q100;
            row.q010 = q.q010;
            row.q001 = q.q001;
            row.frac_optimal = static_cast<double>(optimal) / static_cast<double>(pairs.size());
            row.mean_rows_frac = br.total.rows_possible > 0
                                     ? static_cast<double>(br.total.rows_computed) /
                                           static_cast<double>(br.total.rows_possible)
                                     : 0.0;
            row.stored_bits_ratio = br.total.stored_bits > 0
                                        ? static_cast<double>(br.total.baseline_equiv_bits) /
                                              static_cast<double>(br.total.stored_bits)
                                        : 0.0;
            row.pairs_per_s = options.measure_time ? br.pairs_per_second : 0.0;
            row.oracle_q500 = oq.q500;
            row.oracle_q100 = oq.q100;
            row.oracle_q010 = oq.q010;
            row.oracle_q001 = oq.q001;
            report.rows.push_back(row);
        }
    }
    return report;
}

std::string sweep_csv(const SweepReport& report) {
    std::string out =
        "W,O,sene,dent,et,q500,q100,q010,q001,frac_optimal,mean_rows_frac,"
        "stored_bits_ratio,pairs_per_s,oracle_q500,oracle_q100,oracle_q010,oracle_q001\n";
    for (const SweepRow& r : report.rows) {
        out += std::to_string(r.W) + ',' + std::to_string(r.O) + ',';
        out += std::string(r.sene ? "1" : "0") + ',' + (r.dent ? "1" : "0") + ',' +
               (r.et ? "1" : "0") + ',';
        out += std::to_string(r.q500) + ',' + std::to_string(r.q100) + ',' +
               std::to_string(r.q010) + ',' + std::to_string(r.q001) + ',';
        out += fmt_double(r.frac_optimal) + ',' + fmt_double(r.mean_rows_frac) + ',' +
               fmt_double(r.stored_bits_ratio) + ',' + fmt_double(r.pairs_per_s) + ',';
        out += std::to_string(r.oracle_q500) + ',' + std::to_string(r.oracle_q100) + ',' +
               std::to_string(r.oracle_q010) + ',' + std::to_string(r.oracle_q001) + '\n';
    }
    return out;
}

}  // namespace scrooge
