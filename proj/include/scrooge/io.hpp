#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scrooge {

struct SeqPairRecord {
    std::string id;
    std::string text;
    std::string pattern;
};

enum class PairFormat { Tsv, FastaPair };

// TSV: one pair per line, `id<TAB>text<TAB>pattern`. Sequences are upper-
// cased on ingestion; ids must be unique. Throws InputError with a line
// number on malformed input.
std::vector<SeqPairRecord> read_pairs_tsv(const std::string& path);

// Two FASTA files with records matched by order; the text file's record
// names become the pair ids. Throws InputError when record counts differ.
std::vector<SeqPairRecord> read_pairs_fasta(const std::string& text_path,
                                            const std::string& pattern_path);

// Dispatch on format. For FastaPair, `input` is "<text.fa>,<pattern.fa>".
std::vector<SeqPairRecord> read_pairs(const std::string& input, PairFormat format);

void write_pairs_tsv(std::ostream& os, const std::vector<SeqPairRecord>& pairs);

}  // namespace scrooge
