#include "scrooge/traceback.hpp"

#include <string>

namespace scrooge {

namespace {

// Pattern mask trimmed to the stored width of the table.
BitVector trimmed_mask(const DpTable& table, const PatternMasks& masks, BaseCode c) {
    const BitVector& pm = masks.for_code(c);
    return pm.length() > table.keep_bits() ? pm.slice_high(table.keep_bits()) : pm;
}

EdgeSet edges_at(const DpTable& table, int i, int d, const PatternMasks& masks, BaseCode c) {
    if (table.policy() == StoragePolicy::BaselineEdges) {
        EdgeSet e;
        if (d == 0) {
            const BitVector all = BitVector::ones(table.keep_bits());
            e.insertion = all;
            e.deletion = all;
            e.substitution = all;
            e.match = table.entry(i, 0);  // d=0 entry and match edge coincide
            return e;
        }
        table.load_edges(i, d, &e.insertion, &e.deletion, &e.match);
        e.substitution = shl1_boundary(e.deletion, table.n() - i - 1 <= d - 1);
        return e;
    }
    return regen_edges(table, i, d, masks, c);
}

}  // namespace

EdgeSet regen_edges(const DpTable& table, int i, int d, const PatternMasks& masks,
                    BaseCode text_char) {
    const int n = table.n();
    EdgeSet e;
    if (d == 0) {
        const BitVector all = BitVector::ones(table.keep_bits());
        e.insertion = all;
        e.deletion = all;
        e.substitution = all;
        e.match = shl1_boundary(table.entry(i + 1, 0), n - i - 1 <= 0);
        e.match |= trimmed_mask(table, masks, text_char);
        return e;
    }
    e.insertion = shl1_boundary(table.entry(i, d - 1), n - i <= d - 1);
    e.deletion = table.entry(i + 1, d - 1);
    e.substitution = shl1_boundary(e.deletion, n - i - 1 <= d - 1);
    e.match = shl1_boundary(table.entry(i + 1, d), n - i - 1 <= d);
    e.match |= trimmed_mask(table, masks, text_char);
    return e;
}

Transcript traceback(const DpTable& table, int d_opt, const PatternMasks& masks, CodeView text,
                     int max_steps) {
    const int n = table.n();
    const int m = table.m();
    if (d_opt < 0 || d_opt > table.k() || d_opt >= table.rows_stored())
        throw InternalError("traceback: d_opt " + std::to_string(d_opt) +
                            " not covered by the stored table");

    Transcript ts;
    int i = 0, j = 0, d = d_opt;
    auto emit = [&ts](EditOp op, int dt, int dp) {
        ts.ops.push_back(op);
        ts.text_consumed += dt;
        ts.pattern_consumed += dp;
    };

    while (max_steps < 0 || static_cast<int>(ts.ops.size()) < max_steps) {
        if (i == n && j == m) break;
        if (i == n) {
            // Text consumed; the remaining pattern can only be inserted.
            if (d != m - j)
                throw InternalError("traceback: budget " + std::to_string(d) +
                                    " != remaining pattern " + std::to_string(m - j));
            emit(EditOp::Insertion, 0, 1);
            ++j, --d;
            continue;
        }
        if (j == m) {
            if (d != n - i)
                throw InternalError("traceback: budget " + std::to_string(d) +
                                    " != remaining text " + std::to_string(n - i));
            emit(EditOp::Deletion, 1, 0);
            ++i, --d;
            continue;
        }
        const EdgeSet e = edges_at(table, i, d, masks, text[i]);
        if (!e.match.bit(j)) {
            emit(EditOp::Match, 1, 1);
            ++i, ++j;
        } else if (d > 0 && !e.substitution.bit(j)) {
            emit(EditOp::Substitution, 1, 1);
            ++i, ++j, --d;
        } else if (d > 0 && !e.deletion.bit(j)) {
            emit(EditOp::Deletion, 1, 0);
            ++i, --d;
        } else if (d > 0 && !e.insertion.bit(j)) {
            emit(EditOp::Insertion, 0, 1);
            ++j, --d;
        } else {
            throw InternalError("traceback: no legal step at (i=" + std::to_string(i) +
                                ", j=" + std::to_string(j) + ", d=" + std::to_string(d) + ")");
        }
    }

    if (max_steps < 0 && d != 0)
        throw InternalError("traceback: finished with leftover budget " + std::to_string(d));
    return ts;
}

}  // namespace scrooge
