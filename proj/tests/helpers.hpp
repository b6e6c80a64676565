#pragma once

#include <string>

#include "scrooge/rng.hpp"
#include "scrooge/sequence.hpp"

namespace scrooge::testing {

inline CodeSeq random_dna(SplitMix64& rng, int length) {
    CodeSeq s(static_cast<std::size_t>(length));
    for (auto& c : s) c = static_cast<BaseCode>(rng.next_below(4));
    return s;
}

inline std::string random_dna_string(SplitMix64& rng, int length) {
    return decode_sequence(random_dna(rng, length));
}

}  // namespace scrooge::testing
