#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <string>
#include <string_view>

#include "scrooge/errors.hpp"

namespace scrooge {

// Fixed-length bit string of 1..kMaxBits bits spanning one or more 64-bit
// machine words.
//
// Conventions:
//   - Bit j = 0 is the MOST significant bit of word 0 (the leftmost position
//     in string form); j = length-1 is the last in-use position.
//   - shl() moves bits toward j = 0; zeros enter at the j = length-1 end and
//     bits shifted past j = 0 are discarded. A machine left shift therefore
//     realizes it word by word, carrying across word boundaries.
//   - Bits past `length` in the last word are kept at zero after every
//     operation.
//   - `length` is fixed for the lifetime of a value.
class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;
    static constexpr int kMaxBits = 1024;
    static constexpr int kMaxWords = kMaxBits / kWordBits;

    // Zero-length placeholder so vectors of BitVector can be resized; every
    // real value is constructed with an explicit length.
    BitVector() = default;

    explicit BitVector(int length) : len_(static_cast<std::uint16_t>(checked_length(length))) {}

    static BitVector ones(int length) {
        BitVector v(length);
        for (int w = 0; w < v.word_count(); ++w) v.words_[w] = ~Word{0};
        v.mask_tail();
        return v;
    }

    static BitVector from_words(const Word* src, int length) {
        BitVector v(length);
        for (int w = 0; w < v.word_count(); ++w) v.words_[w] = src[w];
        v.mask_tail();
        return v;
    }

    // Parses "1011..." with bit j = 0 first. Test and debugging aid.
    static BitVector from_string(std::string_view bits) {
        BitVector v(static_cast<int>(bits.size()));
        for (int j = 0; j < v.length(); ++j) {
            if (bits[j] == '1') {
                v.set_bit(j);
            } else if (bits[j] != '0') {
                throw InputError("bad bit character in bit string");
            }
        }
        return v;
    }

    int length() const { return len_; }
    int word_count() const { return (len_ + kWordBits - 1) / kWordBits; }

    bool bit(int j) const {
        assert(j >= 0 && j < len_);
        return (words_[j / kWordBits] >> (kWordBits - 1 - j % kWordBits)) & Word{1};
    }

    // Bit j = 0.
    bool msb() const { return bit(0); }

    void set_bit(int j) {
        assert(j >= 0 && j < len_);
        words_[j / kWordBits] |= Word{1} << (kWordBits - 1 - j % kWordBits);
    }

    void clear_bit(int j) {
        assert(j >= 0 && j < len_);
        words_[j / kWordBits] &= ~(Word{1} << (kWordBits - 1 - j % kWordBits));
    }

    // Shift toward j = 0 by s positions, 0 <= s <= length. Saturates to
    // all-zero at s == length.
    BitVector shl(int s) const {
        assert(s >= 0 && s <= len_);
        BitVector r(len_);
        if (s == len_) return r;
        const int nw = word_count();
        const int off = s / kWordBits;
        const int sh = s % kWordBits;
        for (int w = 0; w + off < nw; ++w) {
            Word x = words_[w + off] << sh;
            if (sh != 0 && w + off + 1 < nw) x |= words_[w + off + 1] >> (kWordBits - sh);
            r.words_[w] = x;
        }
        r.mask_tail();
        return r;
    }

    BitVector& operator&=(const BitVector& o) {
        assert(len_ == o.len_);
        for (int w = 0; w < word_count(); ++w) words_[w] &= o.words_[w];
        return *this;
    }

    BitVector& operator|=(const BitVector& o) {
        assert(len_ == o.len_);
        for (int w = 0; w < word_count(); ++w) words_[w] |= o.words_[w];
        return *this;
    }

    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

    bool operator==(const BitVector& o) const {
        if (len_ != o.len_) return false;
        for (int w = 0; w < word_count(); ++w)
            if (words_[w] != o.words_[w]) return false;
        return true;
    }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    // New vector of length b holding bits j = 0..b-1.
    BitVector slice_high(int b) const {
        assert(b >= 1 && b <= len_);
        BitVector r(b);
        for (int w = 0; w < r.word_count(); ++w) r.words_[w] = words_[w];
        r.mask_tail();
        return r;
    }

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(len_), '0');
        for (int j = 0; j < len_; ++j)
            if (bit(j)) s[static_cast<std::size_t>(j)] = '1';
        return s;
    }

    const Word* words() const { return words_.data(); }

private:
    static int checked_length(int length) {
        if (length < 1 || length > kMaxBits)
            throw ConfigError("bit vector length out of range: " + std::to_string(length));
        return length;
    }

    void mask_tail() {
        const int used = len_ % kWordBits;
        if (used != 0) words_[word_count() - 1] &= ~Word{0} << (kWordBits - used);
    }

    std::array<Word, kMaxWords> words_{};
    std::uint16_t len_ = 0;
};

}  // namespace scrooge
