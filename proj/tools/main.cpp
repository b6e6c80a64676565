// Command-line front end: align / simulate / sweep / bench.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scrooge/batch.hpp"
#include "scrooge/errors.hpp"
#include "scrooge/io.hpp"
#include "scrooge/simulate.hpp"
#include "scrooge/sweep.hpp"

namespace {

using nlohmann::json;

struct OutputTarget {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty() || path == "-") return;
        file.open(path);
        if (!file) throw scrooge::InputError("cannot write '" + path + "'");
        os = &file;
    }
};

scrooge::PairFormat parse_format(const std::string& s) {
    if (s == "tsv") return scrooge::PairFormat::Tsv;
    if (s == "fasta-pair") return scrooge::PairFormat::FastaPair;
    throw scrooge::InputError("unknown input format '" + s + "' (expected tsv or fasta-pair)");
}

scrooge::ErrorMix parse_mix(const std::string& s) {
    scrooge::ErrorMix mix;
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &mix.sub, &mix.ins, &mix.del) != 3)
        throw scrooge::InputError("error mix must be 'sub,ins,del', e.g. 0.4,0.3,0.3");
    return mix;
}

std::vector<scrooge::ImprovementCombo> parse_combos(const std::string& s) {
    std::vector<scrooge::ImprovementCombo> combos;
    std::stringstream ss(s);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token == "all") {
            for (int bits = 0; bits < 8; ++bits)
                combos.push_back({(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0});
            continue;
        }
        scrooge::ImprovementCombo combo;
        if (token != "none") {
            std::stringstream parts(token);
            std::string flag;
            while (std::getline(parts, flag, '+')) {
                if (flag == "sene") combo.sene = true;
                else if (flag == "dent") combo.dent = true;
                else if (flag == "et") combo.et = true;
                else
                    throw scrooge::InputError("unknown improvement '" + flag +
                                              "' (expected sene, dent, et, none or all)");
            }
        }
        combos.push_back(combo);
    }
    if (combos.empty()) throw scrooge::InputError("empty improvement combination list");
    return combos;
}

json batch_json(const std::vector<scrooge::SeqPairRecord>& pairs,
                const scrooge::BatchResult& result) {
    json arr = json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const scrooge::PairOutcome& po = result.outcomes[i];
        arr.push_back({{"id", pairs[i].id},
                       {"distance", po.distance},
                       {"cigar", po.found ? scrooge::cigar_to_string(po.cigar) : "*"},
                       {"windows", po.windows}});
    }
    return arr;
}

json sweep_json(const scrooge::SweepReport& report) {
    json arr = json::array();
    for (const scrooge::SweepRow& r : report.rows) {
        arr.push_back({{"W", r.W},
                       {"O", r.O},
                       {"sene", r.sene},
                       {"dent", r.dent},
                       {"et", r.et},
                       {"q500", r.q500},
                       {"q100", r.q100},
                       {"q010", r.q010},
                       {"q001", r.q001},
                       {"frac_optimal", r.frac_optimal},
                       {"mean_rows_frac", r.mean_rows_frac},
                       {"stored_bits_ratio", r.stored_bits_ratio},
                       {"pairs_per_s", r.pairs_per_s},
                       {"oracle_q500", r.oracle_q500},
                       {"oracle_q100", r.oracle_q100},
                       {"oracle_q010", r.oracle_q010},
                       {"oracle_q001", r.oracle_q001}});
    }
    return arr;
}

struct AlignArgs {
    std::string input;
    std::string format = "tsv";
    std::string output;
    std::string mode = "windowed";
    scrooge::AlignerConfig config;
    int threads = 1;
    bool json_output = false;
};

void add_common_align_options(CLI::App* cmd, AlignArgs& args) {
    cmd->add_option("--input", args.input, "pair file (tsv) or '<text.fa>,<pattern.fa>'")
        ->required();
    cmd->add_option("--format", args.format, "input format: tsv or fasta-pair");
    cmd->add_option("--W", args.config.W, "window size");
    cmd->add_option("--O", args.config.O, "window overlap");
    cmd->add_flag("--sene,!--no-sene", args.config.sene, "store entries, regenerate edges");
    cmd->add_flag("--dent,!--no-dent", args.config.dent, "trim entries unreachable by traceback");
    cmd->add_flag("--et,!--no-et", args.config.early_termination,
                  "stop row construction at the edit distance");
    cmd->add_option("--threads", args.threads, "worker threads");
    cmd->add_option("--output", args.output, "output path (default stdout)");
    cmd->add_option("--mode", args.mode, "windowed or single");
    cmd->add_option("--k", args.config.k_single, "edit budget in single mode");
    cmd->add_flag("--json", args.json_output, "emit JSON instead of TSV");
}

void finish_align_config(AlignArgs& args) {
    if (args.mode == "windowed") {
        args.config.mode = scrooge::AlignerConfig::Mode::Windowed;
    } else if (args.mode == "single") {
        args.config.mode = scrooge::AlignerConfig::Mode::SingleWindow;
        args.config.dent = false;
    } else {
        throw scrooge::InputError("unknown mode '" + args.mode + "' (expected windowed or single)");
    }
}

int run_align(AlignArgs& args, bool bench) {
    finish_align_config(args);
    const auto pairs = scrooge::read_pairs(args.input, parse_format(args.format));
    const scrooge::BatchResult result = scrooge::run_batch(pairs, args.config, args.threads);

    OutputTarget out;
    out.open(args.output);
    if (args.json_output)
        *out.os << batch_json(pairs, result).dump(2) << '\n';
    else
        scrooge::write_batch_tsv(*out.os, pairs, result);

    if (bench) {
        const auto& c = result.total;
        std::cerr << "pairs\t" << pairs.size() << "\nthreads\t" << args.threads << "\nseconds\t"
                  << result.align_seconds << "\npairs_per_s\t" << result.pairs_per_second
                  << "\nwindows\t";
        std::int64_t windows = 0;
        for (const auto& po : result.outcomes) windows += po.windows;
        std::cerr << windows << "\nstored_bits\t" << c.stored_bits << "\ntable_writes\t"
                  << c.table_writes << "\ntable_reads\t" << c.table_reads << "\nrows_computed\t"
                  << c.rows_computed << "\nrows_possible\t" << c.rows_possible
                  << "\ncells_computed\t" << c.cells_computed << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GenASM-family bitvector aligner with SENE, DENT and early termination"};
    app.require_subcommand(1);

    AlignArgs align_args;
    CLI::App* align_cmd = app.add_subcommand("align", "align sequence pairs");
    add_common_align_options(align_cmd, align_args);

    AlignArgs bench_args;
    CLI::App* bench_cmd = app.add_subcommand("bench", "align and report throughput");
    add_common_align_options(bench_cmd, bench_args);

    struct {
        int count = 1000;
        int length = 1000;
        double error_rate = 0.05;
        std::string mix = "0.334,0.333,0.333";
        std::uint64_t seed = 1;
        std::string output;
        std::string gt_output;
    } sim_args;
    CLI::App* sim_cmd = app.add_subcommand("simulate", "generate pairs with known ground truth");
    sim_cmd->add_option("--count", sim_args.count, "number of pairs");
    sim_cmd->add_option("--length", sim_args.length, "text length");
    sim_cmd->add_option("--error-rate", sim_args.error_rate, "per-position error probability");
    sim_cmd->add_option("--mix", sim_args.mix, "sub,ins,del fractions (sum 1)");
    sim_cmd->add_option("--seed", sim_args.seed, "RNG seed");
    sim_cmd->add_option("--output", sim_args.output, "pair TSV path (default stdout)");
    sim_cmd->add_option("--gt", sim_args.gt_output, "also write id<TAB>ground-truth-CIGAR here");

    struct {
        std::string input;
        std::string format = "tsv";
        std::string W_list = "32,64";
        std::string o_rule = "half+1";
        std::string combos = "none,sene+dent+et";
        std::string report;
        int threads = 1;
        bool json_output = false;
        bool no_timing = false;
    } sweep_args;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "accuracy/footprint sweep over W, O, combos");
    sweep_cmd->add_option("--input", sweep_args.input, "pair file")->required();
    sweep_cmd->add_option("--format", sweep_args.format, "input format: tsv or fasta-pair");
    sweep_cmd->add_option("--W-list", sweep_args.W_list, "comma-separated window sizes");
    sweep_cmd->add_option("--O-rule", sweep_args.o_rule, "half+1 or fixed:<n>");
    sweep_cmd->add_option("--combos", sweep_args.combos,
                          "comma list of none|sene|dent|et|sene+dent+et|...|all");
    sweep_cmd->add_option("--threads", sweep_args.threads, "worker threads");
    sweep_cmd->add_option("--report", sweep_args.report, "CSV path (default stdout)");
    sweep_cmd->add_flag("--json", sweep_args.json_output, "emit JSON instead of CSV");
    sweep_cmd->add_flag("--no-timing", sweep_args.no_timing,
                        "zero the throughput column for byte-stable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (align_cmd->parsed()) return run_align(align_args, false);
        if (bench_cmd->parsed()) return run_align(bench_args, true);

        if (sim_cmd->parsed()) {
            const auto sim = scrooge::simulate_pairs(sim_args.count, sim_args.length,
                                                     sim_args.error_rate,
                                                     parse_mix(sim_args.mix), sim_args.seed);
            std::vector<scrooge::SeqPairRecord> pairs;
            pairs.reserve(sim.size());
            for (const auto& sp : sim) pairs.push_back(sp.rec);
            OutputTarget out;
            out.open(sim_args.output);
            scrooge::write_pairs_tsv(*out.os, pairs);
            if (!sim_args.gt_output.empty()) {
                std::ofstream gt(sim_args.gt_output);
                if (!gt) throw scrooge::InputError("cannot write '" + sim_args.gt_output + "'");
                for (const auto& sp : sim)
                    gt << sp.rec.id << '\t' << scrooge::cigar_to_string(sp.ground_truth) << '\n';
            }
            return 0;
        }

        if (sweep_cmd->parsed()) {
            scrooge::SweepOptions options;
            std::stringstream ws(sweep_args.W_list);
            std::string token;
            while (std::getline(ws, token, ','))
                options.W_list.push_back(std::stoi(token));
            if (sweep_args.o_rule == "half+1") {
                options.o_rule.kind = scrooge::OverlapRule::Kind::HalfPlusOne;
            } else if (sweep_args.o_rule.rfind("fixed:", 0) == 0) {
                options.o_rule.kind = scrooge::OverlapRule::Kind::Fixed;
                options.o_rule.fixed = std::stoi(sweep_args.o_rule.substr(6));
            } else {
                throw scrooge::InputError("unknown O rule '" + sweep_args.o_rule + "'");
            }
            options.combos = parse_combos(sweep_args.combos);
            options.threads = sweep_args.threads;
            options.measure_time = !sweep_args.no_timing;
            const auto pairs = scrooge::read_pairs(sweep_args.input, parse_format(sweep_args.format));
            const scrooge::SweepReport report = scrooge::run_sweep(pairs, options);
            OutputTarget out;
            out.open(sweep_args.report);
            if (sweep_args.json_output)
                *out.os << sweep_json(report).dump(2) << '\n';
            else
                *out.os << scrooge::sweep_csv(report);
            return 0;
        }
    } catch (const scrooge::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const scrooge::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const scrooge::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
