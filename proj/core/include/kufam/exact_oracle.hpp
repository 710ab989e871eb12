#pragma once

#include <cstdint>

#include "kufam/bound_params.hpp"
#include "kufam/decomposition.hpp"
#include "kufam/property_check.hpp"
#include "kufam/set_family.hpp"

namespace kufam {

struct OracleOptions {
    std::size_t cap = 24;  ///< largest family size the exact solver accepts
};

/// Result of an exact minimum-cover computation.
struct OracleResult {
    std::uint32_t minimum = 0;  ///< least number of (ell,u)-intersecting parts
    Decomposition optimal_parts;  ///< lexicographically least optimal partition
    std::uint64_t explored = 0;   ///< search-tree nodes visited
};

/// Exact smallest number of (ell,u)-intersecting subfamilies whose union is
/// the family — equivalently the least partition of the disjointness graph
/// into parts of clique number < ell. Branch and bound over part assignments
/// in degeneracy order; the witness is the lexicographically least optimal
/// assignment over the canonical member order.
/// Family larger than the cap -> CapacityError (never approximates).
OracleResult min_cover_exact(const SetFamily& family, std::uint32_t ell, std::uint32_t u,
                             const OracleOptions& options = {});

/// Exact chromatic number via a DSATUR-style branch and bound — a route
/// independent of min_cover_exact, which it must agree with at ell=2.
/// Returns 0 for the empty graph.
std::uint32_t chromatic_number(const DisjointnessGraph& g, std::size_t cap = 24);

struct SearchOptions {
    std::uint64_t budget = 0;   ///< oracle evaluations; 0 = unlimited (exhaustive)
                                ///< or the documented default (hill-climb)
    std::uint64_t seed = 0;     ///< randomized mode only
    bool exhaustive = false;    ///< enumerate all families up to symmetry
    std::size_t oracle_cap = 24;
};

/// Outcome of a lower-bound probe. best_value is a certified lower bound on
/// the decomposition number restricted to this (s, n) — never a value of it.
struct SearchReport {
    std::uint32_t best_value = 0;
    SetFamily witness_family;
    std::uint64_t families_examined = 0;
    bool budget_exhausted = false;
    std::uint64_t seed = 0;
    bool exhaustive = false;
};

/// Searches (k,u)-intersecting s-uniform families over [0,n) for the largest
/// exact minimum cover. Exhaustive mode enumerates families modulo ground-set
/// permutations (feasible envelope: C(n,s) <= 20 and n <= 8, else
/// CapacityError); otherwise a seeded hill-climb with restarts.
/// A best_value above theorem_bound(p) is impossible and raises
/// InvariantViolation.
SearchReport extremal_search(std::uint32_t n, const BoundParams& p,
                             const SearchOptions& options = {});

}  // namespace kufam
