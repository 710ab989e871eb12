#pragma once

#include <cstdint>
#include <vector>

#include "kufam/member_set.hpp"

namespace kufam {

/// Exact C(n, k); returns 0 when k > n. Throws OverflowError instead of wrapping.
std::uint64_t binomial(std::uint32_t n, std::uint32_t k);

/// All C(|f|, u) u-element subsets of f in canonical (lexicographic) order.
/// Requires 1 <= u <= |f|; otherwise DomainError.
std::vector<MemberSet> u_subsets(const MemberSet& f, std::uint32_t u);

}  // namespace kufam
