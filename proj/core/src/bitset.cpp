#include "kufam/bitset.hpp"

namespace kufam {

std::strong_ordering lex_compare(const Bitset& a, const Bitset& b) {
    const std::size_t nw = std::max(a.word_count(), b.word_count());
    for (std::size_t w = 0; w < nw; ++w) {
        const std::uint64_t aw = a.word(w);
        const std::uint64_t bw = b.word(w);
        if (aw == bw) continue;

        const std::uint64_t diff = aw ^ bw;
        const std::uint64_t low = diff & (~diff + 1);  // lowest differing element
        const bool in_a = (aw & low) != 0;

        // The set owning the smallest differing element sorts first, unless the
        // other set has nothing at or above that element — then it is a proper
        // prefix and sorts first instead.
        const Bitset& other = in_a ? b : a;
        const std::uint64_t other_word = in_a ? bw : aw;
        bool other_has_tail = (other_word & ~(low | (low - 1))) != 0;
        for (std::size_t w2 = w + 1; !other_has_tail && w2 < nw; ++w2)
            other_has_tail = other.word(w2) != 0;

        if (in_a)
            return other_has_tail ? std::strong_ordering::less : std::strong_ordering::greater;
        return other_has_tail ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

}  // namespace kufam
