#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scrooge {

// 0..3 encode A,C,G,T. kOtherBase marks everything else (N, gaps, ...);
// it matches nothing, not even itself, so such positions always cost an edit.
using BaseCode = std::uint8_t;
inline constexpr BaseCode kOtherBase = 4;

using CodeView = std::span<const BaseCode>;
using CodeSeq = std::vector<BaseCode>;

inline BaseCode encode_base(char c) {
    switch (c) {
        case 'A': case 'a': return 0;
        case 'C': case 'c': return 1;
        case 'G': case 'g': return 2;
        case 'T': case 't': return 3;
        default: return kOtherBase;
    }
}

inline char decode_base(BaseCode c) { return c < 4 ? "ACGT"[c] : 'N'; }

inline bool bases_match(BaseCode a, BaseCode b) { return a == b && a != kOtherBase; }

inline CodeSeq encode_sequence(std::string_view s) {
    CodeSeq out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = encode_base(s[i]);
    return out;
}

inline std::string decode_sequence(CodeView s) {
    std::string out(s.size(), 'N');
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = decode_base(s[i]);
    return out;
}

}  // namespace scrooge
