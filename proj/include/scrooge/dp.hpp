#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "scrooge/bitvec.hpp"
#include "scrooge/errors.hpp"
#include "scrooge/sequence.hpp"

namespace scrooge {

// What the DP table retains for traceback:
//   BaselineEdges - three transition bitvectors per cell (insertion,
//                   deletion, match; substitution is re-derived by shifting
//                   deletion).
//   SeneEntries   - one bitvector per cell, the entry R[i][d] itself; edges
//                   are regenerated on demand during traceback.
//   DentTrimmed   - like SeneEntries, but only the columns and high bits a
//                   step-limited traceback can reach are kept.
enum class StoragePolicy { BaselineEdges, SeneEntries, DentTrimmed };

// Per-character match masks for one window's pattern chunk: bit i of
// masks[X] is 0 exactly when pattern[i] == X.
struct PatternMasks {
    std::array<BitVector, 4> masks;
    BitVector match_nothing;  // all ones, used for non-ACGT text characters
    int m = 0;

    const BitVector& for_code(BaseCode c) const {
        return c < 4 ? masks[c] : match_nothing;
    }
};

PatternMasks build_pattern_masks(CodeView pattern);

// One GenASM-DC invocation: align a text chunk of length n against a pattern
// chunk of length m, considering at most k edits.
struct WindowTask {
    CodeView text;
    CodeView pattern;
    int k = 0;
};

struct InstrumentationCounters {
    std::uint64_t stored_bits = 0;     // logical bits written to table storage
    std::uint64_t table_writes = 0;    // bitvector stores
    std::uint64_t table_reads = 0;     // bitvector loads
    std::uint64_t rows_computed = 0;   // d-rows evaluated
    std::uint64_t cells_computed = 0;  // update-rule applications
    // Denominators for aggregate ratios: rows a full (no early termination)
    // run would evaluate, and bits the edge-storing layout would write.
    std::uint64_t rows_possible = 0;
    std::uint64_t baseline_equiv_bits = 0;

    void add(const InstrumentationCounters& o) {
        stored_bits += o.stored_bits;
        table_writes += o.table_writes;
        table_reads += o.table_reads;
        rows_computed += o.rows_computed;
        cells_computed += o.cells_computed;
        rows_possible += o.rows_possible;
        baseline_equiv_bits += o.baseline_equiv_bits;
    }
};

// Stored portion of the DP table R for one window, under one storage policy.
// Geometry: rows are d = 0..k, columns are i = 0..n (i = n is the
// initialization column), entries are m-bit vectors. DentTrimmed keeps only
// columns i < keep_cols and bits j < keep_bits of each entry.
class DpTable {
public:
    using Word = BitVector::Word;

    void reset(StoragePolicy policy, int n, int m, int k, int keep_cols, int keep_bits);

    StoragePolicy policy() const { return policy_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int k() const { return k_; }
    int keep_cols() const { return keep_cols_; }
    int keep_bits() const { return keep_bits_; }
    int rows_stored() const { return rows_stored_; }

    bool cell_stored(int i, int d) const {
        return i >= 0 && i < keep_cols_ && d >= 0 && d < rows_stored_;
    }

    // Construction-side stores; vectors arrive as raw words of the full
    // m-bit row buffers and are trimmed to keep_bits here. Callers skip
    // columns >= keep_cols.
    void store_entry(int i, int d, const Word* v);
    void store_edge_cell(int i, int d, const Word* ins, const Word* del, const Word* mat);
    void finish_row(int d) { rows_stored_ = d + 1; }

    // Traceback-side loads; throw OutOfStoredRegionError outside the region.
    BitVector entry(int i, int d) const;
    void load_edges(int i, int d, BitVector* ins, BitVector* del, BitVector* mat) const;

    mutable InstrumentationCounters counters;

private:
    std::size_t slot_index(int i, int d, int slot) const;
    void require_stored(int i, int d) const;
    void copy_trimmed(const Word* src, std::size_t dst);

    StoragePolicy policy_ = StoragePolicy::SeneEntries;
    int n_ = 0, m_ = 0, k_ = 0;
    int keep_cols_ = 0, keep_bits_ = 0;
    int rows_stored_ = 0;
    int words_per_vec_ = 0;
    int slots_per_cell_ = 1;
    std::vector<Word> data_;
};

struct DcResult {
    // Smallest d <= k with msb(R[0][d]) == 0; empty when no such d exists.
    std::optional<int> edit_distance;
    int rows_computed = 0;
};

// Reusable per-worker state: the table, the window's pattern masks, and the
// two scratch rows the construction keeps out of table storage.
struct Workspace {
    DpTable table;
    PatternMasks masks;
    std::vector<BitVector::Word> row_a, row_b;
};

inline constexpr int kNoStepLimit = -1;

// Builds the DP table row by row (d = 0..k) and reports the window edit
// distance. With early_termination, construction stops at the first row
// whose leftmost entry has a 0 in bit j=0. traceback_limit is the step cap
// the subsequent traceback will honor; DentTrimmed requires it to size the
// kept region.
DcResult compute_dc(const WindowTask& task, StoragePolicy policy, bool early_termination,
                    Workspace& ws, int traceback_limit = kNoStepLimit);

// Test accessor: bit j of R[i][d] as retained by the active policy. Throws
// OutOfStoredRegionError for discarded cells or bit positions.
bool theorem1_bit(const DpTable& table, int i, int d, int j);

// DP shift-by-one with the end-of-pattern boundary made explicit. The bit
// entering at position length-1 answers "is the rest of the text disposable
// within the remaining budget" for the column/row the shifted vector refers
// to; a plain zero fill would claim that for free and corrupt entries
// whenever the text runs longer than the pattern.
inline BitVector shl1_boundary(const BitVector& v, bool tail_within_budget) {
    BitVector r = v.shl(1);
    if (!tail_within_budget) r.set_bit(r.length() - 1);
    return r;
}

}  // namespace scrooge
