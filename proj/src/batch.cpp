#include "scrooge/batch.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <ostream>
#include <thread>

#include "scrooge/errors.hpp"

namespace scrooge {

BatchResult run_batch(const std::vector<SeqPairRecord>& pairs, const AlignerConfig& config,
                      int threads) {
    config.validate();
    if (threads < 1) throw ConfigError("thread count must be at least 1");

    // Encode up front; the timed phase covers alignment only.
    std::vector<CodeSeq> texts(pairs.size()), patterns(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].text.empty() || pairs[i].pattern.empty())
            throw InputError("pair '" + pairs[i].id + "': empty sequence");
        texts[i] = encode_sequence(pairs[i].text);
        patterns[i] = encode_sequence(pairs[i].pattern);
    }

    BatchResult out;
    out.outcomes.resize(pairs.size());

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::string first_error;
    bool error_is_input = false;

    auto worker = [&]() {
        Workspace ws;
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= pairs.size()) return;
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error.empty()) return;
            }
            try {
                PairOutcome& po = out.outcomes[idx];
                if (config.mode == AlignerConfig::Mode::SingleWindow) {
                    auto r = align_single_window(texts[idx], patterns[idx], config.k_single,
                                                 config, ws);
                    if (r) {
                        po.found = true;
                        po.distance = r->distance;
                        po.cigar = std::move(r->cigar);
                        po.windows = r->windows;
                        po.counters = r->counters;
                    } else {
                        po.found = false;
                        po.distance = -1;
                        po.windows = 1;
                        po.counters = ws.table.counters;
                    }
                } else {
                    AlignmentResult r = align(texts[idx], patterns[idx], config, ws);
                    po.found = true;
                    po.distance = r.distance;
                    po.cigar = std::move(r.cigar);
                    po.windows = r.windows;
                    po.counters = r.counters;
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error.empty()) {
                    first_error = "pair '" + pairs[idx].id + "': " + e.what();
                    error_is_input = dynamic_cast<const InputError*>(&e) != nullptr ||
                                     dynamic_cast<const ConfigError*>(&e) != nullptr;
                }
                return;
            }
        }
    };

    const int pool = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(pairs.size(), 1)));
    const auto t0 = std::chrono::steady_clock::now();
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(pool));
        for (int t = 0; t < pool; ++t) workers.emplace_back(worker);
        for (std::thread& t : workers) t.join();
    }
    const auto t1 = std::chrono::steady_clock::now();

    if (!first_error.empty()) {
        if (error_is_input) throw InputError(first_error);
        throw InternalError(first_error);
    }

    out.align_seconds = std::chrono::duration<double>(t1 - t0).count();
    out.pairs_per_second =
        out.align_seconds > 0 ? static_cast<double>(pairs.size()) / out.align_seconds : 0.0;
    for (const PairOutcome& po : out.outcomes) out.total.add(po.counters);
    return out;
}

void write_batch_tsv(std::ostream& os, const std::vector<SeqPairRecord>& pairs,
                     const BatchResult& result) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const PairOutcome& po = result.outcomes[i];
        os << pairs[i].id << '\t' << po.distance << '\t'
           << (po.found ? cigar_to_string(po.cigar) : "*") << '\n';
    }
}

}  // namespace scrooge
