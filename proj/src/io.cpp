#include "scrooge/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <unordered_set>

#include "scrooge/errors.hpp"

namespace scrooge {

namespace {

void upcase(std::string& s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
}

void strip_cr(std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
}

void check_unique_ids(const std::vector<SeqPairRecord>& pairs) {
    std::unordered_set<std::string> seen;
    for (const SeqPairRecord& p : pairs)
        if (!seen.insert(p.id).second)
            throw InputError("duplicate pair id '" + p.id + "'");
}

struct FastaRecord {
    std::string name;
    std::string seq;
};

std::vector<FastaRecord> read_fasta(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::vector<FastaRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        if (line[0] == '>') {
            std::string name = line.substr(1, line.find_first_of(" \t", 1) - 1);
            if (name.empty())
                throw InputError(path + ":" + std::to_string(lineno) + ": unnamed FASTA record");
            records.push_back({std::move(name), {}});
        } else {
            if (records.empty())
                throw InputError(path + ":" + std::to_string(lineno) +
                                 ": sequence data before the first '>' header");
            upcase(line);
            records.back().seq += line;
        }
    }
    for (const FastaRecord& r : records)
        if (r.seq.empty()) throw InputError(path + ": record '" + r.name + "' has no sequence");
    return records;
}

}  // namespace

std::vector<SeqPairRecord> read_pairs_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::vector<SeqPairRecord> pairs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        const std::size_t t1 = line.find('\t');
        const std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos ||
            line.find('\t', t2 + 1) != std::string::npos)
            throw InputError(path + ":" + std::to_string(lineno) +
                             ": expected exactly 3 tab-separated fields");
        SeqPairRecord rec;
        rec.id = line.substr(0, t1);
        rec.text = line.substr(t1 + 1, t2 - t1 - 1);
        rec.pattern = line.substr(t2 + 1);
        if (rec.id.empty())
            throw InputError(path + ":" + std::to_string(lineno) + ": empty pair id");
        if (rec.text.empty() || rec.pattern.empty())
            throw InputError(path + ":" + std::to_string(lineno) + ": empty sequence");
        upcase(rec.text);
        upcase(rec.pattern);
        pairs.push_back(std::move(rec));
    }
    check_unique_ids(pairs);
    return pairs;
}

std::vector<SeqPairRecord> read_pairs_fasta(const std::string& text_path,
                                            const std::string& pattern_path) {
    const std::vector<FastaRecord> texts = read_fasta(text_path);
    const std::vector<FastaRecord> patterns = read_fasta(pattern_path);
    if (texts.size() != patterns.size())
        throw InputError("FASTA pair files hold " + std::to_string(texts.size()) + " and " +
                         std::to_string(patterns.size()) + " records; counts must match");
    std::vector<SeqPairRecord> pairs(texts.size());
    for (std::size_t i = 0; i < texts.size(); ++i) {
        pairs[i].id = texts[i].name;
        pairs[i].text = texts[i].seq;
        pairs[i].pattern = patterns[i].seq;
    }
    check_unique_ids(pairs);
    return pairs;
}

std::vector<SeqPairRecord> read_pairs(const std::string& input, PairFormat format) {
    if (format == PairFormat::Tsv) return read_pairs_tsv(input);
    const std::size_t comma = input.find(',');
    if (comma == std::string::npos)
        throw InputError("fasta-pair input must name two files as '<text.fa>,<pattern.fa>'");
    return read_pairs_fasta(input.substr(0, comma), input.substr(comma + 1));
}

void write_pairs_tsv(std::ostream& os, const std::vector<SeqPairRecord>& pairs) {
    for (const SeqPairRecord& p : pairs)
        os << p.id << '\t' << p.text << '\t' << p.pattern << '\n';
}

}  // namespace scrooge
