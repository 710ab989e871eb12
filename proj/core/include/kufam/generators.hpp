#pragma once

#include <cstdint>

#include "kufam/set_family.hpp"

namespace kufam {

/// Parameters for one seeded family construction; the CLI maps flags onto this.
struct GenSpec {
    enum class Kind { random, star, scattered_stars, sunflower, complete };

    Kind kind = Kind::random;
    std::uint32_t n = 0;
    std::uint32_t s = 0;
    std::uint32_t count = 0;
    std::uint32_t u = 1;
    std::uint32_t k = 3;
    std::uint32_t per_star = 1;
    std::uint32_t core_size = 1;
    std::uint32_t petal_size = 1;
    std::uint32_t petals = 1;
    std::uint64_t seed = 0;
};

/// `count` distinct uniform s-subsets of [0,n); Floyd sampling per subset,
/// re-drawing subset-level duplicates. Requires count <= C(n,s).
SetFamily gen_random(std::uint32_t n, std::uint32_t s, std::uint32_t count, std::uint64_t seed);

/// Members all containing the core {0..u-1}; (2,u)-intersecting by construction.
/// Requires n >= s and count <= C(n-u, s-u).
SetFamily gen_star(std::uint32_t n, std::uint32_t s, std::uint32_t u, std::uint32_t count,
                   std::uint64_t seed);

/// Union of k-1 stars on pairwise-disjoint blocks of the ground set:
/// (k,u)-intersecting, and not (k-1,u)-intersecting for k >= 3, per_star >= 1.
/// Requires the k-1 blocks to fit (n/(k-1) >= s) and per_star distinct tails
/// per block.
SetFamily gen_scattered_stars(std::uint32_t n, std::uint32_t s, std::uint32_t u, std::uint32_t k,
                              std::uint32_t per_star, std::uint64_t seed);

/// Common core of core_size elements, pairwise-disjoint petals of petal_size.
/// (k,u)-intersecting for every k >= 2 iff u <= core_size (given >= 2 members).
SetFamily gen_sunflower(std::uint32_t core_size, std::uint32_t petal_size, std::uint32_t petals,
                        std::uint64_t seed);

/// All C(n,s) s-subsets of [0,n).
SetFamily gen_complete(std::uint32_t n, std::uint32_t s);

/// Dispatch on spec.kind.
SetFamily generate(const GenSpec& spec);

}  // namespace kufam
