#include "scrooge/aligner.hpp"

#include <algorithm>
#include <string>

namespace scrooge {

void AlignerConfig::validate() const {
    if (W < 1 || W > BitVector::kMaxBits)
        throw ConfigError("window size W out of range: " + std::to_string(W));
    if (O < 0 || O >= W)
        throw ConfigError("window overlap O must satisfy 0 <= O < W, got O=" + std::to_string(O) +
                          " W=" + std::to_string(W));
    if (dent && mode == Mode::SingleWindow)
        throw ConfigError("trimmed table storage cannot back a full single-window traceback");
    if (mode == Mode::SingleWindow && (k_single < 0 || k_single > BitVector::kMaxBits))
        throw ConfigError("k out of range: " + std::to_string(k_single));
}

namespace {

void append_transcript(Cigar& cigar, const Transcript& ts) {
    for (EditOp op : ts.ops) cigar_append(cigar, edit_op_char(op), 1);
}

}  // namespace

AlignmentResult align(CodeView text, CodeView pattern, const AlignerConfig& config, Workspace& ws) {
    config.validate();
    if (config.mode != AlignerConfig::Mode::Windowed)
        throw ConfigError("align() requires windowed mode");
    if (text.empty() || pattern.empty()) throw InputError("align: empty input sequence");

    const std::int64_t n = static_cast<std::int64_t>(text.size());
    const std::int64_t m = static_cast<std::int64_t>(pattern.size());
    const int W = config.W;
    const int step_limit = W - config.O;
    // Watchdog: each window commits at least one consuming op, so the window
    // count is bounded; tripping this means a progress bug.
    const std::int64_t window_cap = 4 * ((n + m) / step_limit + 2);

    AlignmentResult out;
    std::int64_t toff = 0, poff = 0;
    for (;;) {
        const std::int64_t n_rem = n - toff;
        const std::int64_t m_rem = m - poff;
        if (n_rem == 0 && m_rem == 0) break;
        if (n_rem == 0) {
            cigar_append(out.cigar, 'I', m_rem);
            out.distance += m_rem;
            break;
        }
        if (m_rem == 0) {
            cigar_append(out.cigar, 'D', n_rem);
            out.distance += n_rem;
            break;
        }

        const bool final_window = n_rem <= W && m_rem <= W;
        const int n_w = static_cast<int>(std::min<std::int64_t>(W, n_rem));
        const int m_w = static_cast<int>(std::min<std::int64_t>(W, m_rem));
        StoragePolicy policy = config.storage_policy();
        if (final_window && policy == StoragePolicy::DentTrimmed)
            policy = StoragePolicy::SeneEntries;  // full traceback needs untrimmed entries

        const WindowTask task{text.subspan(static_cast<std::size_t>(toff), n_w),
                              pattern.subspan(static_cast<std::size_t>(poff), m_w), W};
        const DcResult dc = compute_dc(task, policy, config.early_termination, ws, step_limit);
        if (!dc.edit_distance)
            throw InternalError("windowed alignment: no distance <= W found in a window");

        const Transcript ts = traceback(ws.table, *dc.edit_distance, ws.masks, task.text,
                                        final_window ? kNoStepLimit : step_limit);
        if (ts.ops.empty()) throw InternalError("windowed alignment: window made no progress");
        append_transcript(out.cigar, ts);
        out.distance += ts.cost();
        toff += ts.text_consumed;
        poff += ts.pattern_consumed;
        out.counters.add(ws.table.counters);
        out.windows += 1;
        if (out.windows > window_cap)
            throw InternalError("windowed alignment: window count exceeded watchdog cap");
    }
    return out;
}

std::optional<AlignmentResult> align_single_window(CodeView text, CodeView pattern, int k,
                                                   const AlignerConfig& config, Workspace& ws) {
    if (text.empty() || pattern.empty()) throw InputError("align: empty input sequence");
    if (config.dent)
        throw ConfigError("trimmed table storage cannot back a full single-window traceback");
    if (text.size() > BitVector::kMaxBits || pattern.size() > BitVector::kMaxBits)
        throw ConfigError("single-window mode requires sequences of at most " +
                          std::to_string(BitVector::kMaxBits) + " characters");

    const WindowTask task{text, pattern, k};
    const StoragePolicy policy =
        config.sene ? StoragePolicy::SeneEntries : StoragePolicy::BaselineEdges;
    const DcResult dc = compute_dc(task, policy, config.early_termination, ws);
    AlignmentResult out;
    out.windows = 1;
    out.counters.add(ws.table.counters);
    if (!dc.edit_distance) return std::nullopt;

    const Transcript ts = traceback(ws.table, *dc.edit_distance, ws.masks, text, kNoStepLimit);
    if (ts.text_consumed != static_cast<int>(text.size()) ||
        ts.pattern_consumed != static_cast<int>(pattern.size()))
        throw InternalError("single-window traceback did not consume both sequences");
    append_transcript(out.cigar, ts);
    out.distance = ts.cost();
    return out;
}

}  // namespace scrooge
