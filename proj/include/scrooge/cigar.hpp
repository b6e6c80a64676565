#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scrooge/sequence.hpp"

namespace scrooge {

// Extended CIGAR over {=, X, I, D}. The pattern plays the role of the read
// and the text the role of the reference: I consumes pattern only, D
// consumes text only, = and X consume one character of each.
struct CigarOp {
    char op = '=';
    std::int64_t len = 0;
    bool operator==(const CigarOp&) const = default;
};

using Cigar = std::vector<CigarOp>;

inline bool is_cigar_op(char c) { return c == '=' || c == 'X' || c == 'I' || c == 'D'; }

// Appends one run, merging with the trailing run when the op matches.
void cigar_append(Cigar& cigar, char op, std::int64_t len);

std::string cigar_to_string(const Cigar& cigar);

// Parses "3=1X2I"; throws InputError on malformed input.
Cigar cigar_from_string(std::string_view s);

std::int64_t cigar_edit_count(const Cigar& cigar);      // X + I + D
std::int64_t cigar_text_length(const Cigar& cigar);     // = + X + D
std::int64_t cigar_pattern_length(const Cigar& cigar);  // = + X + I

// Checks that replaying the CIGAR transforms text into pattern: lengths
// consumed exactly, '=' only on matching bases, 'X' only on differing ones.
// Throws InputError with a description of the first violation.
void validate_replay(CodeView text, CodeView pattern, const Cigar& cigar);

}  // namespace scrooge
