#pragma once

#include <cstdint>
#include <vector>

#include "kufam/bound_params.hpp"
#include "kufam/decomposition.hpp"
#include "kufam/set_family.hpp"

namespace kufam {

/// A maximal scattered subfamily: members pairwise at intersection < u, and
/// every family member meets at least one of them in >= u elements.
struct Kernel {
    std::vector<std::uint32_t> indices;  ///< ascending member indices

    std::size_t size() const { return indices.size(); }
};

/// The u-element traces of the kernel plus the first-fit assignment of every
/// member to a trace it contains.
struct TraceCover {
    std::vector<MemberSet> traces;          ///< canonical order, deduplicated
    std::vector<std::uint32_t> assignment;  ///< member index -> trace index
};

/// ceil((k-1) * C(s,u) / (ell-1)), exactly.
std::uint64_t theorem_bound(const BoundParams& p);

/// Greedy maximal scattered subfamily in canonical member order.
/// When the family is (k,u)-intersecting the result has at most k-1 members;
/// that is the caller's check, not enforced here.
Kernel scattered_kernel(const SetFamily& family, std::uint32_t u);

/// Assigns every member to the first kernel trace contained in it.
/// A member contained in no trace means the kernel was not maximal ->
/// KernelCoverageError.
TraceCover trace_cover(const SetFamily& family, const Kernel& kernel, std::uint32_t u);

/// Groups nonempty trace-parts, in trace order, into consecutive blocks of at
/// most ell-1 and unions each block into one part.
Decomposition pigeonhole_merge(const TraceCover& cover, std::uint32_t ell);

/// Full pipeline: scattered_kernel -> trace_cover -> pigeonhole_merge.
/// Requires the family to be (k,u)-intersecting; otherwise throws
/// NotIntersectingError carrying the lex-least witness.
Decomposition decompose(const SetFamily& family, const BoundParams& p);

/// Opt-in post-pass: greedily merges a part into the earliest earlier part
/// whose union stays (ell,u)-intersecting. Never increases the part count.
/// The input must cover the family with valid parts -> StructureError.
Decomposition compact(const SetFamily& family, const Decomposition& d, std::uint32_t ell,
                      std::uint32_t u);

}  // namespace kufam
