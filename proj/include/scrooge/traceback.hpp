#pragma once

#include <cstdint>
#include <vector>

#include "scrooge/dp.hpp"

namespace scrooge {

enum class EditOp : std::uint8_t { Match, Substitution, Insertion, Deletion };

inline char edit_op_char(EditOp op) {
    switch (op) {
        case EditOp::Match: return '=';
        case EditOp::Substitution: return 'X';
        case EditOp::Insertion: return 'I';
        case EditOp::Deletion: return 'D';
    }
    return '?';
}

// Edit transcript for one window. Match/Substitution consume one character
// of both sequences, Deletion one text character, Insertion one pattern
// character.
struct Transcript {
    std::vector<EditOp> ops;
    int text_consumed = 0;
    int pattern_consumed = 0;

    int cost() const {
        int c = 0;
        for (EditOp op : ops)
            if (op != EditOp::Match) ++c;
        return c;
    }
};

// The four transition vectors of one cell (i, d). Bit j of each vector is 0
// when the corresponding step is legal from pattern position j, i.e. the
// destination entry bit is 0.
struct EdgeSet {
    BitVector insertion;
    BitVector deletion;
    BitVector substitution;
    BitVector match;
};

// Recomputes the edges of cell (i, d) from stored entries by re-applying the
// construction rules to the neighbor entries R[i][d-1], R[i+1][d-1] and
// R[i+1][d]. Requires an entry-storing policy; throws OutOfStoredRegionError
// when a needed neighbor was discarded.
EdgeSet regen_edges(const DpTable& table, int i, int d, const PatternMasks& masks,
                    BaseCode text_char);

// Walks the path of 0 bits from (i=0, j=0, d=d_opt), recording one op per
// step: Match -> (i+1, j+1, d), Substitution -> (i+1, j+1, d-1),
// Deletion -> (i+1, j, d-1), Insertion -> (i, j+1, d-1). Ties are broken
// Match > Substitution > Deletion > Insertion. Stops after max_steps ops
// (pass kNoStepLimit for a full traceback), or when both sequences are
// consumed.
Transcript traceback(const DpTable& table, int d_opt, const PatternMasks& masks, CodeView text,
                     int max_steps);

}  // namespace scrooge
