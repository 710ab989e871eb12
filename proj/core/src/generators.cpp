#include "kufam/generators.hpp"

#include <set>

#include "kufam/combinatorics.hpp"
#include "kufam/errors.hpp"
#include "kufam/rng.hpp"

namespace kufam {

namespace {

// Floyd's subset sampling: s distinct values from [0, range), uniform.
MemberSet sample_subset(SplitMix64& rng, std::uint32_t range, std::uint32_t s,
                        std::uint32_t offset) {
    std::vector<ElementId> elems;
    elems.reserve(s);
    Bitset seen(range);
    for (std::uint32_t j = range - s; j < range; ++j) {
        const auto t = static_cast<std::uint32_t>(rng.below(j + 1));
        const std::uint32_t pick = seen.test(t) ? j : t;
        seen.set(pick);
        elems.push_back(offset + pick);
    }
    return MemberSet(std::span<const ElementId>(elems));
}

std::vector<MemberSet> distinct_samples(SplitMix64& rng, std::uint32_t range, std::uint32_t s,
                                        std::uint32_t offset, std::uint32_t count,
                                        const MemberSet& core) {
    std::set<MemberSet> out;
    while (out.size() < count) {
        MemberSet tail = sample_subset(rng, range, s, offset);
        std::vector<ElementId> all = core.elements();
        const std::vector<ElementId> te = tail.elements();
        all.insert(all.end(), te.begin(), te.end());
        out.insert(MemberSet(std::span<const ElementId>(all)));
    }
    return {out.begin(), out.end()};
}

}  // namespace

SetFamily gen_random(std::uint32_t n, std::uint32_t s, std::uint32_t count, std::uint64_t seed) {
    if (s < 1 || n < 1) throw DomainError("gen_random: s and n must be positive");
    if (count > binomial(n, s))
        throw DomainError("gen_random: count=" + std::to_string(count) + " exceeds C(" +
                          std::to_string(n) + "," + std::to_string(s) + ")");
    SplitMix64 rng(seed);
    std::set<MemberSet> members;
    while (members.size() < count) members.insert(sample_subset(rng, n, s, 0));
    return SetFamily(s, n, {members.begin(), members.end()});
}

SetFamily gen_star(std::uint32_t n, std::uint32_t s, std::uint32_t u, std::uint32_t count,
                   std::uint64_t seed) {
    if (s < 1 || n < s) throw DomainError("gen_star: requires 1 <= s <= n");
    if (u < 1 || u > s) throw DomainError("gen_star: u outside [1,s]");
    if (count > binomial(n - u, s - u))
        throw DomainError("gen_star: count=" + std::to_string(count) + " exceeds C(" +
                          std::to_string(n - u) + "," + std::to_string(s - u) + ")");

    std::vector<ElementId> core_elems;
    for (std::uint32_t e = 0; e < u; ++e) core_elems.push_back(e);
    const MemberSet core{std::span<const ElementId>(core_elems)};

    if (u == s) {
        std::vector<MemberSet> members;
        if (count == 1) members.push_back(core);
        return SetFamily(s, n, std::move(members));
    }

    SplitMix64 rng(seed);
    return SetFamily(s, n, distinct_samples(rng, n - u, s - u, u, count, core));
}

SetFamily gen_scattered_stars(std::uint32_t n, std::uint32_t s, std::uint32_t u, std::uint32_t k,
                              std::uint32_t per_star, std::uint64_t seed) {
    if (k < 2) throw DomainError("gen_scattered_stars: k must be >= 2");
    if (s < 1 || u < 1 || u > s) throw DomainError("gen_scattered_stars: u outside [1,s]");
    if (per_star < 1) throw DomainError("gen_scattered_stars: per_star must be >= 1");
    const std::uint32_t stars = k - 1;
    const std::uint32_t block = n / stars;
    if (block < s)
        throw DomainError("gen_scattered_stars: ground set too small for " +
                          std::to_string(stars) + " disjoint blocks of size >= " +
                          std::to_string(s));
    if (per_star > binomial(block - u, s - u))
        throw DomainError("gen_scattered_stars: per_star=" + std::to_string(per_star) +
                          " exceeds C(" + std::to_string(block - u) + "," +
                          std::to_string(s - u) + ")");

    SplitMix64 rng(seed);
    std::vector<MemberSet> members;
    members.reserve(static_cast<std::size_t>(stars) * per_star);
    for (std::uint32_t star = 0; star < stars; ++star) {
        const std::uint32_t base = star * block;
        std::vector<ElementId> core_elems;
        for (std::uint32_t e = 0; e < u; ++e) core_elems.push_back(base + e);
        const MemberSet core{std::span<const ElementId>(core_elems)};

        if (u == s) {
            members.push_back(core);
            continue;
        }
        const std::vector<MemberSet> star_members =
            distinct_samples(rng, block - u, s - u, base + u, per_star, core);
        members.insert(members.end(), star_members.begin(), star_members.end());
    }
    return SetFamily(s, n, std::move(members));
}

SetFamily gen_sunflower(std::uint32_t core_size, std::uint32_t petal_size, std::uint32_t petals,
                        std::uint64_t seed) {
    (void)seed;  // the construction is fully determined; seed kept for GenSpec symmetry
    const std::uint32_t s = core_size + petal_size;
    if (s < 1) throw DomainError("gen_sunflower: core_size + petal_size must be >= 1");
    if (petals < 1) throw DomainError("gen_sunflower: petals must be >= 1");

    const std::uint32_t n = core_size + petals * petal_size;
    std::vector<MemberSet> members;
    members.reserve(petals);
    for (std::uint32_t p = 0; p < petals; ++p) {
        std::vector<ElementId> elems;
        elems.reserve(s);
        for (std::uint32_t e = 0; e < core_size; ++e) elems.push_back(e);
        for (std::uint32_t e = 0; e < petal_size; ++e)
            elems.push_back(core_size + p * petal_size + e);
        members.emplace_back(std::span<const ElementId>(elems));
    }
    return SetFamily(s, n, std::move(members));
}

SetFamily gen_complete(std::uint32_t n, std::uint32_t s) {
    if (s < 1 || n < s) throw DomainError("gen_complete: requires 1 <= s <= n");
    std::vector<ElementId> ground;
    ground.reserve(n);
    for (std::uint32_t e = 0; e < n; ++e) ground.push_back(e);
    return SetFamily(s, n, u_subsets(MemberSet{std::span<const ElementId>(ground)}, s));
}

SetFamily generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenSpec::Kind::random:
            return gen_random(spec.n, spec.s, spec.count, spec.seed);
        case GenSpec::Kind::star:
            return gen_star(spec.n, spec.s, spec.u, spec.count, spec.seed);
        case GenSpec::Kind::scattered_stars:
            return gen_scattered_stars(spec.n, spec.s, spec.u, spec.k, spec.per_star, spec.seed);
        case GenSpec::Kind::sunflower:
            return gen_sunflower(spec.core_size, spec.petal_size, spec.petals, spec.seed);
        case GenSpec::Kind::complete:
            return gen_complete(spec.n, spec.s);
    }
    throw DomainError("unknown generator kind");
}

}  // namespace kufam
