#include "kufam/combinatorics.hpp"

#include <limits>

#include "kufam/errors.hpp"

namespace kufam {

std::uint64_t binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    // 128-bit intermediates keep every C(n,k) with a 64-bit value exact
    // (covers all n <= 64); anything wider is rejected, never wrapped.
    unsigned __int128 r = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw OverflowError("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                ") overflows 64-bit arithmetic");
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<MemberSet> u_subsets(const MemberSet& f, std::uint32_t u) {
    const std::size_t s = f.size();
    if (u < 1 || u > s)
        throw DomainError("u_subsets: u=" + std::to_string(u) + " outside [1," +
                          std::to_string(s) + "]");

    const std::vector<ElementId> elems = f.elements();
    std::vector<MemberSet> out;
    out.reserve(binomial(static_cast<std::uint32_t>(s), u));

    // Index combinations in lexicographic order; elems is ascending, so the
    // resulting element sequences come out in canonical order too.
    std::vector<std::uint32_t> idx(u);
    for (std::uint32_t i = 0; i < u; ++i) idx[i] = i;
    std::vector<ElementId> pick(u);
    while (true) {
        for (std::uint32_t i = 0; i < u; ++i) pick[i] = elems[idx[i]];
        out.emplace_back(std::span<const ElementId>(pick));

        std::int64_t j = static_cast<std::int64_t>(u) - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] ==
                             static_cast<std::uint32_t>(s - u) + static_cast<std::uint32_t>(j))
            --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (std::size_t i = static_cast<std::size_t>(j) + 1; i < u; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

}  // namespace kufam
