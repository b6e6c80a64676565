#include "scrooge/dp.hpp"

#include <algorithm>
#include <string>

namespace scrooge {

PatternMasks build_pattern_masks(CodeView pattern) {
    if (pattern.empty()) throw InputError("empty pattern");
    const int m = static_cast<int>(pattern.size());
    PatternMasks pm;
    pm.m = m;
    pm.match_nothing = BitVector::ones(m);
    for (int c = 0; c < 4; ++c) pm.masks[c] = BitVector::ones(m);
    for (int i = 0; i < m; ++i) {
        if (pattern[i] < 4) pm.masks[pattern[i]].clear_bit(i);
        // non-ACGT pattern characters keep a 1 in every mask: they match
        // nothing and force a substitution or indel
    }
    return pm;
}

void DpTable::reset(StoragePolicy policy, int n, int m, int k, int keep_cols, int keep_bits) {
    policy_ = policy;
    n_ = n;
    m_ = m;
    k_ = k;
    keep_cols_ = keep_cols;
    keep_bits_ = keep_bits;
    rows_stored_ = 0;
    words_per_vec_ = (keep_bits + BitVector::kWordBits - 1) / BitVector::kWordBits;
    slots_per_cell_ = policy == StoragePolicy::BaselineEdges ? 3 : 1;
    counters = InstrumentationCounters{};
    const std::size_t words = static_cast<std::size_t>(k + 1) * keep_cols * slots_per_cell_ *
                              words_per_vec_;
    data_.assign(words, 0);
}

std::size_t DpTable::slot_index(int i, int d, int slot) const {
    const std::size_t cell = static_cast<std::size_t>(d) * keep_cols_ + i;
    return (cell * slots_per_cell_ + slot) * words_per_vec_;
}

void DpTable::require_stored(int i, int d) const {
    if (!cell_stored(i, d))
        throw OutOfStoredRegionError("DP table access outside stored region: cell (i=" +
                                     std::to_string(i) + ", d=" + std::to_string(d) +
                                     "), stored " + std::to_string(keep_cols_) + " columns, " +
                                     std::to_string(rows_stored_) + " rows");
}

void DpTable::copy_trimmed(const Word* src, std::size_t dst) {
    std::copy(src, src + words_per_vec_, data_.begin() + dst);
    const int used = keep_bits_ % BitVector::kWordBits;
    if (used != 0)
        data_[dst + words_per_vec_ - 1] &= ~Word{0} << (BitVector::kWordBits - used);
}

void DpTable::store_entry(int i, int d, const Word* v) {
    assert(policy_ != StoragePolicy::BaselineEdges);
    assert(i >= 0 && i < keep_cols_ && d >= 0 && d <= k_);
    copy_trimmed(v, slot_index(i, d, 0));
    counters.stored_bits += static_cast<std::uint64_t>(keep_bits_);
    counters.table_writes += 1;
}

void DpTable::store_edge_cell(int i, int d, const Word* ins, const Word* del, const Word* mat) {
    assert(policy_ == StoragePolicy::BaselineEdges);
    assert(i >= 0 && i < keep_cols_ && d >= 0 && d <= k_);
    copy_trimmed(ins, slot_index(i, d, 0));
    copy_trimmed(del, slot_index(i, d, 1));
    copy_trimmed(mat, slot_index(i, d, 2));
    counters.stored_bits += 3 * static_cast<std::uint64_t>(keep_bits_);
    counters.table_writes += 3;
}

BitVector DpTable::entry(int i, int d) const {
    require_stored(i, d);
    if (policy_ != StoragePolicy::BaselineEdges) {
        counters.table_reads += 1;
        return BitVector::from_words(data_.data() + slot_index(i, d, 0), keep_bits_);
    }
    // Edge layout: reconstruct the entry. The d=0 row and the i=n column
    // keep the entry itself in the match slot.
    if (d == 0 || i == n_) {
        counters.table_reads += 1;
        return BitVector::from_words(data_.data() + slot_index(i, d, 2), keep_bits_);
    }
    BitVector ins, del, mat;
    load_edges(i, d, &ins, &del, &mat);
    const BitVector sub = shl1_boundary(del, n_ - i - 1 <= d - 1);
    return ins & del & sub & mat;
}

void DpTable::load_edges(int i, int d, BitVector* ins, BitVector* del, BitVector* mat) const {
    assert(policy_ == StoragePolicy::BaselineEdges);
    require_stored(i, d);
    *ins = BitVector::from_words(data_.data() + slot_index(i, d, 0), keep_bits_);
    *del = BitVector::from_words(data_.data() + slot_index(i, d, 1), keep_bits_);
    *mat = BitVector::from_words(data_.data() + slot_index(i, d, 2), keep_bits_);
    counters.table_reads += 3;
}

DcResult compute_dc(const WindowTask& task, StoragePolicy policy, bool early_termination,
                    Workspace& ws, int traceback_limit) {
    using Word = BitVector::Word;
    const int n = static_cast<int>(task.text.size());
    const int m = static_cast<int>(task.pattern.size());
    const int k = task.k;
    if (n < 1 || m < 1) throw InputError("compute_dc: empty window sequence");
    if (m > BitVector::kMaxBits)
        throw ConfigError("compute_dc: pattern chunk longer than " +
                          std::to_string(BitVector::kMaxBits) + " bits");
    if (k < 0 || k > BitVector::kMaxBits)
        throw ConfigError("compute_dc: k out of range: " + std::to_string(k));

    int keep_cols = n + 1;
    int keep_bits = m;
    if (policy == StoragePolicy::DentTrimmed) {
        if (traceback_limit < 1)
            throw ConfigError("trimmed storage requires a positive traceback step limit");
        keep_cols = std::min(n, traceback_limit) + 1;
        keep_bits = std::min(m, traceback_limit + 1);
    }
    DpTable& table = ws.table;
    table.reset(policy, n, m, k, keep_cols, keep_bits);
    ws.masks = build_pattern_masks(task.pattern);
    const bool edges = policy == StoragePolicy::BaselineEdges;

    // Scratch rows of full m-bit vectors, one word stride per cell. These
    // stay out of table storage: each retained cell is written exactly once.
    const int wpv = (m + BitVector::kWordBits - 1) / BitVector::kWordBits;
    const int last = wpv - 1;
    const Word end_bit = Word{1} << (BitVector::kWordBits - 1 - (m - 1) % BitVector::kWordBits);
    ws.row_a.assign(static_cast<std::size_t>(n + 1) * wpv, 0);
    ws.row_b.assign(static_cast<std::size_t>(n + 1) * wpv, 0);
    Word* old_row = ws.row_a.data();
    Word* cur_row = ws.row_b.data();
    auto cell = [wpv](Word* row, int i) { return row + static_cast<std::size_t>(i) * wpv; };

    const BitVector all_ones = BitVector::ones(m);
    std::optional<int> found;
    int rows = 0;

    // Row d = 0: initialization column, then the exact-match rule.
    std::copy(all_ones.words(), all_ones.words() + wpv, cell(cur_row, n));
    if (n < keep_cols) {
        if (edges)
            table.store_edge_cell(n, 0, all_ones.words(), all_ones.words(), cell(cur_row, n));
        else
            table.store_entry(n, 0, cell(cur_row, n));
    }
    for (int i = n - 1; i >= 0; --i) {
        const Word* right = cell(cur_row, i + 1);
        Word* out = cell(cur_row, i);
        const Word* pm = ws.masks.for_code(task.text[i]).words();
        for (int w = 0; w < wpv; ++w) {
            const Word carry = w < last ? right[w + 1] >> (BitVector::kWordBits - 1) : 0;
            out[w] = ((right[w] << 1) | carry) | pm[w];
        }
        if (n - i - 1 > 0) out[last] |= end_bit;  // more text left than budget
        if (i < keep_cols) {
            if (edges)
                table.store_edge_cell(i, 0, all_ones.words(), all_ones.words(), out);
            else
                table.store_entry(i, 0, out);
        }
        table.counters.cells_computed += 1;
    }
    rows = 1;
    table.finish_row(0);
    if ((cur_row[0] >> (BitVector::kWordBits - 1)) == 0) found = 0;

    Word ins_buf[BitVector::kMaxWords];
    Word mat_buf[BitVector::kMaxWords];
    for (int d = 1; d <= k; ++d) {
        if (found && early_termination) break;
        std::swap(old_row, cur_row);
        const BitVector init = all_ones.shl(std::min(d, m));
        std::copy(init.words(), init.words() + wpv, cell(cur_row, n));
        if (n < keep_cols) {
            if (edges)
                table.store_edge_cell(n, d, all_ones.words(), all_ones.words(), cell(cur_row, n));
            else
                table.store_entry(n, d, cell(cur_row, n));
        }
        for (int i = n - 1; i >= 0; --i) {
            const Word* north = cell(old_row, i);       // R[i][d-1]
            const Word* diag = cell(old_row, i + 1);    // R[i+1][d-1]
            const Word* east = cell(cur_row, i + 1);    // R[i+1][d]
            Word* out = cell(cur_row, i);
            const Word* pm = ws.masks.for_code(task.text[i]).words();
            const Word end_ins = n - i <= d - 1 ? 0 : end_bit;
            const Word end_sub = n - i - 1 <= d - 1 ? 0 : end_bit;
            const Word end_mat = n - i - 1 <= d ? 0 : end_bit;
            for (int w = 0; w < wpv; ++w) {
                const Word carry_n = w < last ? north[w + 1] >> (BitVector::kWordBits - 1) : 0;
                const Word carry_d = w < last ? diag[w + 1] >> (BitVector::kWordBits - 1) : 0;
                const Word carry_e = w < last ? east[w + 1] >> (BitVector::kWordBits - 1) : 0;
                Word ins = (north[w] << 1) | carry_n;
                Word sub = (diag[w] << 1) | carry_d;
                Word mat = ((east[w] << 1) | carry_e) | pm[w];
                if (w == last) {
                    ins |= end_ins;
                    sub |= end_sub;
                    mat |= end_mat;
                }
                ins_buf[w] = ins;
                mat_buf[w] = mat;
                out[w] = ins & diag[w] & sub & mat;
            }
            if (i < keep_cols) {
                if (edges)
                    table.store_edge_cell(i, d, ins_buf, diag, mat_buf);
                else
                    table.store_entry(i, d, out);
            }
            table.counters.cells_computed += 1;
        }
        ++rows;
        table.finish_row(d);
        if (!found && (cur_row[0] >> (BitVector::kWordBits - 1)) == 0) found = d;
    }

    table.counters.rows_computed += static_cast<std::uint64_t>(rows);
    table.counters.rows_possible += static_cast<std::uint64_t>(k) + 1;
    table.counters.baseline_equiv_bits +=
        3ull * (static_cast<std::uint64_t>(n) + 1) * (static_cast<std::uint64_t>(k) + 1) * m;

    return DcResult{found, rows};
}

bool theorem1_bit(const DpTable& table, int i, int d, int j) {
    if (j < 0 || j >= table.keep_bits())
        throw OutOfStoredRegionError("theorem1_bit: bit " + std::to_string(j) +
                                     " outside the stored " + std::to_string(table.keep_bits()) +
                                     " bits per entry");
    return table.entry(i, d).bit(j);
}

}  // namespace scrooge
