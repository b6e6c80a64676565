#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "scrooge/cigar.hpp"
#include "scrooge/dp.hpp"
#include "scrooge/oracle.hpp"
#include "scrooge/traceback.hpp"

using namespace scrooge;
using scrooge::testing::random_dna;

namespace {

CodeSeq enc(const char* s) { return encode_sequence(s); }

Cigar transcript_cigar(const Transcript& ts) {
    Cigar c;
    for (EditOp op : ts.ops) cigar_append(c, edit_op_char(op), 1);
    return c;
}

std::string ops_string(const Transcript& ts) {
    std::string s;
    for (EditOp op : ts.ops) s += edit_op_char(op);
    return s;
}

}  // namespace

TEST_CASE("transcript examples") {
    Workspace ws;
    const CodeSeq text = enc("ACGT");
    const CodeSeq pattern = enc("ACGA");
    const DcResult r = compute_dc({text, pattern, 4}, StoragePolicy::SeneEntries, false, ws);
    REQUIRE(r.edit_distance == 1);
    const Transcript ts = traceback(ws.table, 1, ws.masks, text, kNoStepLimit);
    CHECK(ops_string(ts) == "===X");
    CHECK(ts.text_consumed == 4);
    CHECK(ts.pattern_consumed == 4);
    CHECK(ts.cost() == 1);

    const CodeSeq same = enc("GATTACA");
    const DcResult rid = compute_dc({same, same, 7}, StoragePolicy::SeneEntries, true, ws);
    REQUIRE(rid.edit_distance == 0);
    const Transcript tid = traceback(ws.table, 0, ws.masks, same, kNoStepLimit);
    CHECK(ops_string(tid) == "=======");
}

TEST_CASE("step-limited traceback stops after W-O edges") {
    // W=4, O=3 window: exactly one committed op.
    Workspace ws;
    const CodeSeq text = enc("ACGT");
    const CodeSeq pattern = enc("ACGA");
    compute_dc({text, pattern, 4}, StoragePolicy::DentTrimmed, false, ws, 1);
    const Transcript ts = traceback(ws.table, 1, ws.masks, text, 1);
    CHECK(ts.ops.size() == 1);
    CHECK(ts.ops[0] == EditOp::Match);
    CHECK(ts.text_consumed == 1);
    CHECK(ts.pattern_consumed == 1);
}

TEST_CASE("regenerated edges reconstruct the stored entry") {
    SplitMix64 rng(31);
    Workspace ws;
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 2 + static_cast<int>(rng.next_below(12));
        const int m = 2 + static_cast<int>(rng.next_below(12));
        const CodeSeq text = random_dna(rng, n);
        const CodeSeq pattern = random_dna(rng, m);
        compute_dc({text, pattern, n}, StoragePolicy::SeneEntries, false, ws);
        for (int d = 1; d <= n; ++d)
            for (int i = 0; i < n; ++i) {
                const EdgeSet e = regen_edges(ws.table, i, d, ws.masks,
                                              text[static_cast<std::size_t>(i)]);
                const BitVector combined = e.insertion & e.deletion & e.substitution & e.match;
                REQUIRE(combined == ws.table.entry(i, d));
            }
    }
}

TEST_CASE("regenerated edges offer an origin at the Fig-style cell") {
    Workspace ws;
    const CodeSeq text = enc("ACGT");
    const CodeSeq pattern = enc("ACGA");
    compute_dc({text, pattern, 4}, StoragePolicy::SeneEntries, false, ws);
    const EdgeSet e = regen_edges(ws.table, 2, 1, ws.masks, text[2]);
    const bool any_zero =
        !e.insertion.bit(2) || !e.deletion.bit(2) || !e.substitution.bit(2) || !e.match.bit(2);
    CHECK(any_zero);
    CHECK(!e.match.bit(2));
}

TEST_CASE("regenerated edges equal the edges a baseline run stored") {
    SplitMix64 rng(32);
    Workspace ws_b, ws_s;
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 2 + static_cast<int>(rng.next_below(16));
        const int m = 2 + static_cast<int>(rng.next_below(16));
        const CodeSeq text = random_dna(rng, n);
        const CodeSeq pattern = random_dna(rng, m);
        compute_dc({text, pattern, n}, StoragePolicy::BaselineEdges, false, ws_b);
        compute_dc({text, pattern, n}, StoragePolicy::SeneEntries, false, ws_s);
        for (int d = 1; d <= n; ++d)
            for (int i = 0; i < n; ++i) {
                BitVector ins, del, mat;
                ws_b.table.load_edges(i, d, &ins, &del, &mat);
                const EdgeSet e = regen_edges(ws_s.table, i, d, ws_s.masks,
                                              text[static_cast<std::size_t>(i)]);
                REQUIRE(e.insertion == ins);
                REQUIRE(e.deletion == del);
                REQUIRE(e.match == mat);
                REQUIRE(e.substitution == shl1_boundary(del, n - i - 1 <= d - 1));
            }
    }
}

TEST_CASE("transcripts replay and cost exactly d_opt under every policy") {
    SplitMix64 rng(33);
    Workspace ws;
    for (int iter = 0; iter < 120; ++iter) {
        const int n = 1 + static_cast<int>(rng.next_below(48));
        const int m = 1 + static_cast<int>(rng.next_below(48));
        const CodeSeq text = random_dna(rng, n);
        const CodeSeq pattern = random_dna(rng, m);
        const int k = 48;
        std::string previous;
        for (StoragePolicy policy : {StoragePolicy::BaselineEdges, StoragePolicy::SeneEntries}) {
            const DcResult r = compute_dc({text, pattern, k}, policy, false, ws);
            REQUIRE(r.edit_distance.has_value());
            const Transcript ts = traceback(ws.table, *r.edit_distance, ws.masks, text,
                                            kNoStepLimit);
            CHECK(ts.cost() == *r.edit_distance);
            CHECK(ts.text_consumed == n);
            CHECK(ts.pattern_consumed == m);
            CHECK_NOTHROW(validate_replay(text, pattern, transcript_cigar(ts)));
            const std::string rendered = ops_string(ts);
            if (!previous.empty()) CHECK(rendered == previous);  // SENE == baseline transcripts
            previous = rendered;
        }
    }
}

TEST_CASE("trimmed tables serve every step-limited traceback without region faults") {
    SplitMix64 rng(34);
    Workspace ws_dent, ws_sene;
    const int W = 32, O = 17;
    for (int iter = 0; iter < 120; ++iter) {
        const CodeSeq text = random_dna(rng, W);
        CodeSeq pattern = text;
        // Mutate a few positions so the path uses all edge kinds.
        for (int e = 0; e < 6; ++e) {
            const std::size_t pos = rng.next_below(pattern.size());
            pattern[pos] = static_cast<BaseCode>(rng.next_below(4));
        }
        const DcResult rd =
            compute_dc({text, pattern, W}, StoragePolicy::DentTrimmed, true, ws_dent, W - O);
        REQUIRE(rd.edit_distance.has_value());
        Transcript limited;
        CHECK_NOTHROW(limited = traceback(ws_dent.table, *rd.edit_distance, ws_dent.masks, text,
                                          W - O));
        CHECK(static_cast<int>(limited.ops.size()) <= W - O);

        // Same prefix as an untrimmed traceback of the same window.
        const DcResult rs =
            compute_dc({text, pattern, W}, StoragePolicy::SeneEntries, true, ws_sene);
        const Transcript full =
            traceback(ws_sene.table, *rs.edit_distance, ws_sene.masks, text, W - O);
        CHECK(ops_string(limited) == ops_string(full));
    }
}

TEST_CASE("reads outside the trimmed region raise the stored-region error") {
    Workspace ws;
    SplitMix64 rng(35);
    const CodeSeq text = random_dna(rng, 64);
    const CodeSeq pattern = random_dna(rng, 64);
    compute_dc({text, pattern, 64}, StoragePolicy::DentTrimmed, false, ws, 31);
    CHECK_THROWS_AS(ws.table.entry(40, 1), OutOfStoredRegionError);
    CHECK_THROWS_AS(theorem1_bit(ws.table, 0, 0, 40), OutOfStoredRegionError);
    CHECK_THROWS_AS(regen_edges(ws.table, 33, 2, ws.masks, text[33]), OutOfStoredRegionError);
    CHECK_NOTHROW(theorem1_bit(ws.table, 31, 5, 31));
}
