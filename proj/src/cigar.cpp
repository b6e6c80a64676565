#include "scrooge/cigar.hpp"

#include <cctype>

#include "scrooge/errors.hpp"

namespace scrooge {

void cigar_append(Cigar& cigar, char op, std::int64_t len) {
    if (len <= 0) return;
    if (!cigar.empty() && cigar.back().op == op) {
        cigar.back().len += len;
    } else {
        cigar.push_back({op, len});
    }
}

std::string cigar_to_string(const Cigar& cigar) {
    std::string s;
    for (const CigarOp& run : cigar) {
        s += std::to_string(run.len);
        s += run.op;
    }
    return s;
}

Cigar cigar_from_string(std::string_view s) {
    Cigar cigar;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos])))
            throw InputError("malformed CIGAR: expected run length at position " + std::to_string(pos));
        std::int64_t len = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            len = len * 10 + (s[pos] - '0');
            if (len > (std::int64_t{1} << 40)) throw InputError("malformed CIGAR: run length overflow");
            ++pos;
        }
        if (pos == s.size()) throw InputError("malformed CIGAR: trailing run length without op");
        const char op = s[pos++];
        if (!is_cigar_op(op))
            throw InputError(std::string("malformed CIGAR: unknown op '") + op + "'");
        if (len == 0) throw InputError("malformed CIGAR: zero-length run");
        cigar_append(cigar, op, len);
    }
    return cigar;
}

std::int64_t cigar_edit_count(const Cigar& cigar) {
    std::int64_t edits = 0;
    for (const CigarOp& run : cigar)
        if (run.op != '=') edits += run.len;
    return edits;
}

std::int64_t cigar_text_length(const Cigar& cigar) {
    std::int64_t n = 0;
    for (const CigarOp& run : cigar)
        if (run.op != 'I') n += run.len;
    return n;
}

std::int64_t cigar_pattern_length(const Cigar& cigar) {
    std::int64_t n = 0;
    for (const CigarOp& run : cigar)
        if (run.op != 'D') n += run.len;
    return n;
}

void validate_replay(CodeView text, CodeView pattern, const Cigar& cigar) {
    std::size_t i = 0, j = 0;
    for (const CigarOp& run : cigar) {
        if (run.len <= 0) throw InputError("CIGAR replay: non-positive run length");
        for (std::int64_t r = 0; r < run.len; ++r) {
            switch (run.op) {
                case '=':
                    if (i >= text.size() || j >= pattern.size())
                        throw InputError("CIGAR replay: '=' past end of sequence");
                    if (!bases_match(text[i], pattern[j]))
                        throw InputError("CIGAR replay: '=' on differing bases at text position " +
                                         std::to_string(i));
                    ++i, ++j;
                    break;
                case 'X':
                    if (i >= text.size() || j >= pattern.size())
                        throw InputError("CIGAR replay: 'X' past end of sequence");
                    if (bases_match(text[i], pattern[j]))
                        throw InputError("CIGAR replay: 'X' on matching bases at text position " +
                                         std::to_string(i));
                    ++i, ++j;
                    break;
                case 'I':
                    if (j >= pattern.size()) throw InputError("CIGAR replay: 'I' past end of pattern");
                    ++j;
                    break;
                case 'D':
                    if (i >= text.size()) throw InputError("CIGAR replay: 'D' past end of text");
                    ++i;
                    break;
                default:
                    throw InputError(std::string("CIGAR replay: unknown op '") + run.op + "'");
            }
        }
    }
    if (i != text.size()) throw InputError("CIGAR replay: text not fully consumed");
    if (j != pattern.size()) throw InputError("CIGAR replay: pattern not fully consumed");
}

}  // namespace scrooge
