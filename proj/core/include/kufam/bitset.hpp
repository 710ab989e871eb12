#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace kufam {

/// Dynamic bitset used for member sets, adjacency rows, and search masks.
///
/// Semantics are those of a set of non-negative integers: all operations
/// treat positions beyond the allocated words as absent, so bitsets of
/// different allocated widths compare and combine consistently.
class Bitset {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    Bitset() = default;
    explicit Bitset(std::size_t width) : words_((width + 63) / 64, 0) {}

    void set(std::size_t i) {
        const std::size_t w = i / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (i % 64);
    }

    void reset(std::size_t i) {
        const std::size_t w = i / 64;
        if (w < words_.size()) words_[w] &= ~(std::uint64_t{1} << (i % 64));
    }

    /// Clears every position < limit.
    void clear_below(std::size_t limit) {
        const std::size_t w = limit / 64;
        for (std::size_t i = 0; i < std::min(w, words_.size()); ++i) words_[i] = 0;
        if (w < words_.size()) words_[w] &= ~std::uint64_t{0} << (limit % 64);
    }

    /// All positions [0, width) set.
    static Bitset full(std::size_t width) {
        Bitset b(width);
        for (std::size_t i = 0; i < width; ++i) b.set(i);
        return b;
    }

    bool test(std::size_t i) const {
        const std::size_t w = i / 64;
        return w < words_.size() && (words_[w] >> (i % 64)) & 1;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w != 0) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Lowest set position, or npos when empty.
    std::size_t first() const { return next(0); }

    /// Lowest set position >= from, or npos.
    std::size_t next(std::size_t from) const {
        std::size_t w = from / 64;
        if (w >= words_.size()) return npos;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from % 64));
        while (true) {
            if (cur != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w >= words_.size()) return npos;
            cur = words_[w];
        }
    }

    std::size_t intersection_count(const Bitset& other) const {
        const std::size_t nw = std::min(words_.size(), other.words_.size());
        std::size_t c = 0;
        for (std::size_t i = 0; i < nw; ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    bool intersects(const Bitset& other) const {
        const std::size_t nw = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < nw; ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            const std::uint64_t ow = i < other.words_.size() ? other.words_[i] : 0;
            if (words_[i] & ~ow) return false;
        }
        return true;
    }

    Bitset& operator&=(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
        return *this;
    }

    Bitset& operator|=(const Bitset& other) {
        if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
        for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    /// Removes every position present in `other`.
    Bitset& and_not(const Bitset& other) {
        const std::size_t nw = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < nw; ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        const std::size_t nw = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < nw; ++i)
            if (a.word(i) != b.word(i)) return false;
        return true;
    }

    std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }
    std::size_t word_count() const { return words_.size(); }

    std::vector<std::uint32_t> positions() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for (std::size_t p = first(); p != npos; p = next(p + 1))
            out.push_back(static_cast<std::uint32_t>(p));
        return out;
    }

private:
    std::vector<std::uint64_t> words_;
};

/// Orders bitsets as their increasing element sequences compare
/// lexicographically ({1,2} < {1,3} < {2,3}; a proper prefix sorts first).
std::strong_ordering lex_compare(const Bitset& a, const Bitset& b);

}  // namespace kufam
