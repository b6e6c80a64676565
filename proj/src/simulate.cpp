#include "scrooge/simulate.hpp"

#include <cmath>
#include <string>

#include "scrooge/errors.hpp"
#include "scrooge/rng.hpp"
#include "scrooge/sequence.hpp"

namespace scrooge {

std::vector<SimulatedPair> simulate_pairs(int count, int length, double error_rate,
                                          const ErrorMix& mix, std::uint64_t seed) {
    if (count < 0) throw InputError("simulate: negative pair count");
    if (length < 1) throw InputError("simulate: length must be at least 1");
    if (!(error_rate >= 0.0 && error_rate < 1.0))
        throw InputError("simulate: error rate must lie in [0, 1)");
    if (mix.sub < 0 || mix.ins < 0 || mix.del < 0 ||
        std::abs(mix.sub + mix.ins + mix.del - 1.0) > 1e-6)
        throw InputError("simulate: error mix fractions must be non-negative and sum to 1");

    SplitMix64 master(seed);
    std::vector<SimulatedPair> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int p = 0; p < count; ++p) {
        SplitMix64 rng(master.next());
        SimulatedPair sp;
        sp.rec.id = "sim" + std::to_string(p);
        sp.rec.text.resize(static_cast<std::size_t>(length));
        for (int i = 0; i < length; ++i)
            sp.rec.text[static_cast<std::size_t>(i)] =
                decode_base(static_cast<BaseCode>(rng.next_below(4)));

        std::string& pattern = sp.rec.pattern;
        for (int i = 0; i < length; ++i) {
            const char original = sp.rec.text[static_cast<std::size_t>(i)];
            if (rng.next_unit() < error_rate) {
                const double r = rng.next_unit();
                if (r < mix.sub) {
                    const BaseCode from = encode_base(original);
                    const BaseCode to =
                        static_cast<BaseCode>((from + 1 + rng.next_below(3)) % 4);
                    pattern += decode_base(to);
                    cigar_append(sp.ground_truth, 'X', 1);
                } else if (r < mix.sub + mix.ins) {
                    pattern += decode_base(static_cast<BaseCode>(rng.next_below(4)));
                    cigar_append(sp.ground_truth, 'I', 1);
                    pattern += original;
                    cigar_append(sp.ground_truth, '=', 1);
                } else {
                    cigar_append(sp.ground_truth, 'D', 1);
                }
            } else {
                pattern += original;
                cigar_append(sp.ground_truth, '=', 1);
            }
        }
        // A fully deleted pattern would violate the non-empty record
        // invariant; keep one base as a substitution in that corner case.
        if (pattern.empty()) {
            pattern += decode_base(static_cast<BaseCode>(
                (encode_base(sp.rec.text[0]) + 1 + rng.next_below(3)) % 4));
            sp.ground_truth.clear();
            cigar_append(sp.ground_truth, 'X', 1);
            if (length > 1) cigar_append(sp.ground_truth, 'D', length - 1);
        }
        out.push_back(std::move(sp));
    }
    return out;
}

}  // namespace scrooge
