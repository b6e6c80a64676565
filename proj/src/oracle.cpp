#include "scrooge/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "scrooge/errors.hpp"

namespace scrooge::oracle {

int levenshtein(CodeView text, CodeView pattern) {
    const std::size_t n = text.size(), m = pattern.size();
    std::vector<int> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            const int diag = prev[j - 1] + (bases_match(text[i - 1], pattern[j - 1]) ? 0 : 1);
            cur[j] = std::min({diag, prev[j] + 1, cur[j - 1] + 1});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

std::vector<std::vector<int>> suffix_distance_table(CodeView text, CodeView pattern) {
    const int n = static_cast<int>(text.size()), m = static_cast<int>(pattern.size());
    std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1, 0));
    for (int j = 0; j <= m; ++j) d[n][j] = m - j;
    for (int i = n - 1; i >= 0; --i) {
        d[i][m] = n - i;
        for (int j = m - 1; j >= 0; --j) {
            const int diag = d[i + 1][j + 1] + (bases_match(text[i], pattern[j]) ? 0 : 1);
            d[i][j] = std::min({diag, d[i + 1][j] + 1, d[i][j + 1] + 1});
        }
    }
    return d;
}

GlobalAlignment global_align(CodeView text, CodeView pattern) {
    const std::size_t n = text.size(), m = pattern.size();
    if (n > 100000 || m > 100000)
        throw InputError("global_align: sequence longer than the 10^5 quadratic-cost guard");
    if ((n + 1) * (m + 1) > std::size_t{1} << 30)
        throw InputError("global_align: pair too large for the exact traceback matrix");

    // Move codes per cell: 0 = diagonal match, 1 = diagonal substitution,
    // 2 = delete text[i-1], 3 = insert pattern[j-1].
    std::vector<std::uint8_t> move((n + 1) * (m + 1));
    auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };

    std::vector<int> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        prev[j] = static_cast<int>(j);
        move[at(0, j)] = 3;
    }
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = static_cast<int>(i);
        move[at(i, 0)] = 2;
        for (std::size_t j = 1; j <= m; ++j) {
            const bool eq = bases_match(text[i - 1], pattern[j - 1]);
            const int diag = prev[j - 1] + (eq ? 0 : 1);
            const int del = prev[j] + 1;
            const int ins = cur[j - 1] + 1;
            int best = diag;
            std::uint8_t mv = eq ? 0 : 1;
            if (del < best) best = del, mv = 2;
            if (ins < best) best = ins, mv = 3;
            cur[j] = best;
            move[at(i, j)] = mv;
        }
        std::swap(prev, cur);
    }

    GlobalAlignment out;
    out.distance = prev[m];
    Cigar rev;
    std::size_t i = n, j = m;
    while (i > 0 || j > 0) {
        switch (move[at(i, j)]) {
            case 0: cigar_append(rev, '=', 1); --i, --j; break;
            case 1: cigar_append(rev, 'X', 1); --i, --j; break;
            case 2: cigar_append(rev, 'D', 1); --i; break;
            default: cigar_append(rev, 'I', 1); --j; break;
        }
    }
    for (auto it = rev.rbegin(); it != rev.rend(); ++it)
        cigar_append(out.cigar, it->op, it->len);
    return out;
}

std::int64_t score_cigar(const Cigar& cigar, const ScoringParams& params) {
    std::int64_t score = 0;
    char prev_op = '\0';
    for (const CigarOp& run : cigar) {
        if (!is_cigar_op(run.op))
            throw InputError(std::string("score_cigar: unknown op '") + run.op + "'");
        if (run.len <= 0) throw InputError("score_cigar: non-positive run length");
        switch (run.op) {
            case '=': score += std::int64_t{params.match_bonus} * run.len; break;
            case 'X': score -= std::int64_t{params.mismatch_penalty} * run.len; break;
            case 'I':
            case 'D':
                // Each maximal I or D run is one gap; adjacent runs of the
                // same op arrive merged, runs of different gap ops are
                // separate gaps.
                if (run.op == prev_op)
                    score -= std::int64_t{params.gap_extend} * run.len;
                else
                    score -= params.gap_open + std::int64_t{params.gap_extend} * run.len;
                break;
        }
        prev_op = run.op;
    }
    return score;
}

}  // namespace scrooge::oracle
