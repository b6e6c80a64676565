#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "helpers.hpp"
#include "scrooge/batch.hpp"
#include "scrooge/io.hpp"
#include "scrooge/oracle.hpp"
#include "scrooge/simulate.hpp"
#include "scrooge/sweep.hpp"

using namespace scrooge;

namespace {

struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const std::string& name, const std::string& contents)
        : path(std::filesystem::temp_directory_path() / name) {
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

std::string batch_tsv(const std::vector<SeqPairRecord>& pairs, const BatchResult& result) {
    std::ostringstream os;
    write_batch_tsv(os, pairs, result);
    return os.str();
}

}  // namespace

TEST_CASE("tsv ingestion") {
    TempFile f("scrooge_pairs.tsv", "p1\tACGT\tACGA\np2\tacg\tacg\n");
    const auto pairs = read_pairs_tsv(f.path.string());
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].id == "p1");
    CHECK(pairs[0].text == "ACGT");
    CHECK(pairs[0].pattern == "ACGA");
    CHECK(pairs[1].text == "ACG");  // uppercased

    TempFile empty("scrooge_empty.tsv", "");
    CHECK(read_pairs_tsv(empty.path.string()).empty());

    TempFile bad("scrooge_bad.tsv", "p1\tACGT\tACGA\nbroken line\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_pairs_tsv(bad.path.string())),
                         doctest::Contains(":2:"), InputError);

    TempFile dup("scrooge_dup.tsv", "p1\tAC\tAC\np1\tGG\tGG\n");
    CHECK_THROWS_AS(static_cast<void>(read_pairs_tsv(dup.path.string())), InputError);

    CHECK_THROWS_AS(static_cast<void>(read_pairs_tsv("/nonexistent/file.tsv")), InputError);
}

TEST_CASE("fasta-pair ingestion") {
    TempFile ta("scrooge_a.fa", ">r1 desc\nACGT\nACGT\n>r2\nTTTT\n");
    TempFile tb("scrooge_b.fa", ">x1\nACGTAC\nGT\n>x2\nTTTA\n");
    const auto pairs = read_pairs_fasta(ta.path.string(), tb.path.string());
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].id == "r1");
    CHECK(pairs[0].text == "ACGTACGT");
    CHECK(pairs[0].pattern == "ACGTACGT");
    CHECK(pairs[1].pattern == "TTTA");

    TempFile tc("scrooge_c.fa", ">only\nAC\n");
    CHECK_THROWS_AS(static_cast<void>(read_pairs_fasta(ta.path.string(), tc.path.string())),
                    InputError);

    const auto via_dispatch =
        read_pairs(ta.path.string() + "," + tb.path.string(), PairFormat::FastaPair);
    CHECK(via_dispatch.size() == 2);
}

TEST_CASE("simulator basics") {
    const auto clean = simulate_pairs(5, 80, 0.0, ErrorMix{}, 7);
    for (const auto& sp : clean) {
        CHECK(sp.rec.text == sp.rec.pattern);
        CHECK(cigar_to_string(sp.ground_truth) == "80=");
    }

    const auto subs_only = simulate_pairs(20, 100, 0.1, ErrorMix{1, 0, 0}, 8);
    for (const auto& sp : subs_only) {
        for (const CigarOp& run : sp.ground_truth) CHECK((run.op == '=' || run.op == 'X'));
        CHECK(sp.rec.text.size() == sp.rec.pattern.size());
    }

    // Ground truth replays, and the oracle distance never exceeds its edits.
    const auto mixed = simulate_pairs(30, 120, 0.08, ErrorMix{}, 9);
    for (const auto& sp : mixed) {
        const CodeSeq text = encode_sequence(sp.rec.text);
        const CodeSeq pattern = encode_sequence(sp.rec.pattern);
        CHECK_NOTHROW(validate_replay(text, pattern, sp.ground_truth));
        CHECK(oracle::levenshtein(text, pattern) <= cigar_edit_count(sp.ground_truth));
    }

    // Deterministic for a fixed seed.
    const auto again = simulate_pairs(30, 120, 0.08, ErrorMix{}, 9);
    for (std::size_t i = 0; i < mixed.size(); ++i) {
        CHECK(mixed[i].rec.text == again[i].rec.text);
        CHECK(mixed[i].rec.pattern == again[i].rec.pattern);
    }

    CHECK_THROWS_AS(simulate_pairs(1, 0, 0.0, ErrorMix{}, 1), InputError);
    CHECK_THROWS_AS(simulate_pairs(1, 10, 1.0, ErrorMix{}, 1), InputError);
    CHECK_THROWS_AS(simulate_pairs(1, 10, 0.1, ErrorMix{0.9, 0.0, 0.0}, 1), InputError);
}

TEST_CASE("simulated error load matches a small-scale calibration") {
    // Calibrate the oracle-distance-per-injected-error factor at length 32,
    // then predict the mean oracle distance at length 64.
    const double rate = 0.05;
    const auto calib = simulate_pairs(400, 32, rate, ErrorMix{}, 11);
    double calib_sum = 0;
    for (const auto& sp : calib)
        calib_sum += oracle::levenshtein(encode_sequence(sp.rec.text),
                                         encode_sequence(sp.rec.pattern));
    const double factor = (calib_sum / 400.0) / (rate * 32.0);

    const auto sample = simulate_pairs(1000, 64, rate, ErrorMix{}, 12);
    double sum = 0;
    for (const auto& sp : sample)
        sum += oracle::levenshtein(encode_sequence(sp.rec.text),
                                   encode_sequence(sp.rec.pattern));
    const double mean = sum / 1000.0;
    const double predicted = rate * 64.0 * factor;
    CHECK(mean >= 0.85 * predicted);
    CHECK(mean <= 1.15 * predicted);
}

TEST_CASE("run_batch ordering, determinism and diagnostics") {
    const auto sims = simulate_pairs(40, 300, 0.08, ErrorMix{}, 13);
    std::vector<SeqPairRecord> pairs;
    for (const auto& sp : sims) pairs.push_back(sp.rec);

    AlignerConfig cfg;
    const BatchResult one = run_batch(pairs, cfg, 1);
    REQUIRE(one.outcomes.size() == pairs.size());
    const BatchResult four = run_batch(pairs, cfg, 4);
    CHECK(batch_tsv(pairs, one) == batch_tsv(pairs, four));
    CHECK(one.total.stored_bits == four.total.stored_bits);

    const BatchResult single = run_batch({pairs[0]}, cfg, 1);
    CHECK(single.outcomes.size() == 1);
    CHECK(single.outcomes[0].found);

    AlignerConfig sw;
    sw.mode = AlignerConfig::Mode::SingleWindow;
    sw.dent = false;
    sw.k_single = 2;
    const std::vector<SeqPairRecord> far{{"far", "AAAAAAAA", "CCCCCCCC"}};
    const BatchResult nf = run_batch(far, sw, 1);
    CHECK(!nf.outcomes[0].found);
    CHECK(batch_tsv(far, nf) == "far\t-1\t*\n");

    CHECK_THROWS_AS(run_batch(pairs, cfg, 0), ConfigError);
    const std::vector<SeqPairRecord> empty_seq{{"e", "", "ACGT"}};
    CHECK_THROWS_AS(run_batch(empty_seq, cfg, 1), InputError);
}

TEST_CASE("worker errors name the failing pair") {
    AlignerConfig sw;
    sw.mode = AlignerConfig::Mode::SingleWindow;
    sw.dent = false;
    // Single-window mode rejects sequences longer than the bitvector limit;
    // the batch wraps that error with the pair id and keeps its category.
    const std::vector<SeqPairRecord> pairs{
        {"toolong", std::string(2000, 'A'), std::string(2000, 'A')}};
    CHECK_THROWS_WITH_AS(static_cast<void>(run_batch(pairs, sw, 1)),
                         doctest::Contains("toolong"), InputError);
}

TEST_CASE("batch totals equal the sum of per-pair counters") {
    const auto sims = simulate_pairs(25, 500, 0.05, ErrorMix{}, 16);
    std::vector<SeqPairRecord> pairs;
    for (const auto& sp : sims) pairs.push_back(sp.rec);
    const BatchResult br = run_batch(pairs, AlignerConfig{}, 2);
    InstrumentationCounters sum;
    for (const PairOutcome& po : br.outcomes) sum.add(po.counters);
    CHECK(sum.stored_bits == br.total.stored_bits);
    CHECK(sum.table_writes == br.total.table_writes);
    CHECK(sum.rows_computed == br.total.rows_computed);
    CHECK(sum.cells_computed == br.total.cells_computed);
}

TEST_CASE("thread pool speedup on multi-core hosts") {
    if (std::thread::hardware_concurrency() < 8) return;  // soft check
    const auto sims = simulate_pairs(1000, 1000, 0.05, ErrorMix{}, 17);
    std::vector<SeqPairRecord> pairs;
    for (const auto& sp : sims) pairs.push_back(sp.rec);
    AlignerConfig cfg;
    cfg.early_termination = false;  // keep per-pair work uniform
    const BatchResult one = run_batch(pairs, cfg, 1);
    const BatchResult eight = run_batch(pairs, cfg, 8);
    CHECK(eight.pairs_per_second >= 3.0 * one.pairs_per_second);
}

TEST_CASE("nearest-rank quantiles against a naive recomputation") {
    SplitMix64 rng(14);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = 1 + static_cast<int>(rng.next_below(500));
        std::vector<std::int64_t> scores(static_cast<std::size_t>(n));
        for (auto& s : scores) s = static_cast<std::int64_t>(rng.next_below(2001)) - 1000;
        for (double p : {0.5, 0.1, 0.01, 0.001}) {
            std::vector<std::int64_t> sorted = scores;
            std::sort(sorted.begin(), sorted.end());
            std::size_t rank = static_cast<std::size_t>(
                std::ceil(p * static_cast<double>(n)));
            if (rank < 1) rank = 1;
            const std::int64_t naive = sorted[rank - 1];
            CHECK(worst_quantile(scores, p) == naive);
        }
    }
    CHECK_THROWS_AS(worst_quantile({}, 0.5), InputError);
}

TEST_CASE("sweep rows, O rule, and single-pair quantiles") {
    const auto sims = simulate_pairs(8, 400, 0.05, ErrorMix{}, 15);
    std::vector<SeqPairRecord> pairs;
    for (const auto& sp : sims) pairs.push_back(sp.rec);

    SweepOptions options;
    options.W_list = {32, 64};
    options.combos = {{false, false, false}, {true, true, true}};
    options.measure_time = false;
    const SweepReport report = run_sweep(pairs, options);
    REQUIRE(report.rows.size() == 4);
    CHECK(report.rows[0].W == 32);
    CHECK(report.rows[0].O == 17);
    CHECK(report.rows[2].W == 64);
    CHECK(report.rows[2].O == 33);

    // Improvements change footprint, never scores.
    CHECK(report.rows[2].q500 == report.rows[3].q500);
    CHECK(report.rows[2].q001 == report.rows[3].q001);
    CHECK(report.rows[3].stored_bits_ratio > report.rows[2].stored_bits_ratio);
    CHECK(report.rows[2].frac_optimal == report.rows[3].frac_optimal);

    // Single-pair dataset: all quantiles equal that pair's score.
    const std::vector<SeqPairRecord> single{pairs[0]};
    const SweepReport sr = run_sweep(single, options);
    for (const SweepRow& row : sr.rows) {
        CHECK(row.q500 == row.q001);
        CHECK(row.q100 == row.q010);
        CHECK(row.q500 == row.q100);
    }

    // Byte-identical CSV across runs with timing off.
    const SweepReport again = run_sweep(pairs, options);
    CHECK(sweep_csv(report) == sweep_csv(again));
}
