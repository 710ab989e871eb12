#include <doctest.h>

#include <algorithm>

#include "kufam/decomposer.hpp"
#include "kufam/errors.hpp"
#include "kufam/generators.hpp"
#include "kufam/property_check.hpp"
#include "kufam/rng.hpp"
#include "support.hpp"

using namespace kufam;
using testsupport::random_intersecting_family;

namespace {

SetFamily two_star_family() {
    return SetFamily(2, 7, {MemberSet{1, 2}, MemberSet{1, 3}, MemberSet{4, 5}, MemberSet{4, 6}});
}

// First maximal scattered subfamily in subset-lexicographic order — which is
// exactly what the canonical greedy should produce.
std::vector<std::uint32_t> brute_force_greedy_kernel(const SetFamily& f, std::uint32_t u) {
    std::vector<std::uint32_t> kernel;
    for (std::uint32_t i = 0; i < f.size(); ++i) {
        bool far_from_all = true;
        for (std::uint32_t j : kernel)
            if (intersection_size(f.member(i), f.member(j)) >= u) far_from_all = false;
        if (far_from_all) kernel.push_back(i);
    }
    return kernel;
}

}  // namespace

TEST_SUITE_BEGIN("decomposer");

TEST_CASE("theorem_bound examples") {
    CHECK(theorem_bound({3, 3, 1, 2}) == 6);
    CHECK(theorem_bound({4, 5, 2, 3}) == 12);
    CHECK(theorem_bound({3, 4, 2, 3}) == 5);  // ceil(4.5)
    CHECK_THROWS_AS(theorem_bound({3, 2, 1, 2}), DomainError);   // ell >= k
    CHECK_THROWS_AS(theorem_bound({3, 3, 4, 2}), DomainError);   // u > s
    CHECK_THROWS_AS(theorem_bound({64, 1u << 30, 32, 2}), OverflowError);
}

TEST_CASE("scattered_kernel: star collapses to its first member") {
    const SetFamily star = gen_star(10, 3, 2, 7, 5);
    const Kernel kernel = scattered_kernel(star, 2);
    REQUIRE(kernel.size() == 1);
    CHECK(kernel.indices[0] == 0);
}

TEST_CASE("scattered_kernel: cycle family keeps an opposite pair") {
    // Canonical order: {1,2},{1,4},{2,3},{3,4}; greedy picks {1,2} then {3,4}.
    const SetFamily cycle(2, 5,
                          {MemberSet{1, 2}, MemberSet{2, 3}, MemberSet{3, 4}, MemberSet{4, 1}});
    const Kernel kernel = scattered_kernel(cycle, 1);
    CHECK(kernel.indices == std::vector<std::uint32_t>{0, 3});
    CHECK(cycle.member(kernel.indices[0]) == MemberSet{1, 2});
    CHECK(cycle.member(kernel.indices[1]) == MemberSet{3, 4});
    CHECK(kernel.indices == brute_force_greedy_kernel(cycle, 1));
}

TEST_CASE("scattered_kernel: pairwise-disjoint members all stay") {
    const SetFamily f(2, 7, {MemberSet{1, 2}, MemberSet{3, 4}, MemberSet{5, 6}});
    CHECK(scattered_kernel(f, 1).indices == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(scattered_kernel(SetFamily(2, 4, {}), 1).size() == 0);
}

TEST_CASE("scattered_kernel: greedy maximal is not maximum, by design") {
    // {1,2,3} meets everything, so the greedy kernel stops at one member even
    // though three pairwise-disjoint members exist. The k-1 size bound is only
    // claimed on (k,u)-intersecting inputs, and this family is not (3,1).
    const SetFamily f(3, 10,
                      {MemberSet{1, 2, 3}, MemberSet{1, 4, 5}, MemberSet{2, 6, 7},
                       MemberSet{3, 8, 9}});
    CHECK(scattered_kernel(f, 1).indices == std::vector<std::uint32_t>{0});
    CHECK_FALSE(is_intersecting(f, 3, 1));
}

TEST_CASE("kernel is scattered and covering on random corpora") {
    SplitMix64 rng(555);
    for (int i = 0; i < 100; ++i) {
        const auto n = static_cast<std::uint32_t>(4 + rng.below(8));
        const auto s = static_cast<std::uint32_t>(1 + rng.below(4));
        const auto u = static_cast<std::uint32_t>(1 + rng.below(s));
        const auto count = static_cast<std::uint32_t>(
            rng.below(std::min<std::uint64_t>(binomial(n, s), 18) + 1));
        const SetFamily f = gen_random(n, s, count, rng.next());
        const Kernel kernel = scattered_kernel(f, u);

        CHECK(kernel.indices == brute_force_greedy_kernel(f, u));
        for (std::size_t a = 0; a < kernel.size(); ++a)
            for (std::size_t b = a + 1; b < kernel.size(); ++b)
                CHECK(intersection_size(f.member(kernel.indices[a]),
                                        f.member(kernel.indices[b])) < u);
        for (std::uint32_t m = 0; m < f.size(); ++m) {
            bool covered = false;
            for (std::uint32_t j : kernel.indices)
                if (intersection_size(f.member(m), f.member(j)) >= u) covered = true;
            CHECK(covered);
        }
    }
}

TEST_CASE("trace_cover: single star") {
    const SetFamily star(2, 5, {MemberSet{1, 2}, MemberSet{1, 3}, MemberSet{1, 4}});
    const Kernel kernel = scattered_kernel(star, 1);
    const TraceCover cover = trace_cover(star, kernel, 1);
    REQUIRE(cover.traces.size() == 2);
    CHECK(cover.traces[0] == MemberSet{1});
    CHECK(cover.traces[1] == MemberSet{2});
    CHECK(cover.assignment == std::vector<std::uint32_t>{0, 0, 0});
}

TEST_CASE("trace_cover: two stars") {
    const SetFamily f = two_star_family();
    const TraceCover cover = trace_cover(f, scattered_kernel(f, 1), 1);
    REQUIRE(cover.traces.size() == 4);
    CHECK(cover.traces[0] == MemberSet{1});
    CHECK(cover.traces[1] == MemberSet{2});
    CHECK(cover.traces[2] == MemberSet{4});
    CHECK(cover.traces[3] == MemberSet{5});
    CHECK(cover.assignment == std::vector<std::uint32_t>{0, 0, 2, 2});
}

TEST_CASE("trace_cover: empty family and broken kernels") {
    const SetFamily empty(2, 4, {});
    const TraceCover cover = trace_cover(empty, Kernel{}, 1);
    CHECK(cover.traces.empty());
    CHECK(cover.assignment.empty());

    const SetFamily f(2, 5, {MemberSet{1, 2}, MemberSet{3, 4}});
    CHECK_THROWS_AS(trace_cover(f, Kernel{{0}}, 1), KernelCoverageError);
    CHECK_THROWS_AS(trace_cover(f, Kernel{{7}}, 1), StructureError);
}

TEST_CASE("trace assignment is the first containing trace") {
    SplitMix64 rng(808);
    for (int i = 0; i < 60; ++i) {
        const auto n = static_cast<std::uint32_t>(4 + rng.below(8));
        const auto s = static_cast<std::uint32_t>(2 + rng.below(3));
        const auto u = static_cast<std::uint32_t>(1 + rng.below(s));
        const auto count = static_cast<std::uint32_t>(
            1 + rng.below(std::min<std::uint64_t>(binomial(n, s), 14)));
        const SetFamily f = gen_random(n, s, count, rng.next());
        const TraceCover cover = trace_cover(f, scattered_kernel(f, u), u);
        for (std::uint32_t m = 0; m < f.size(); ++m) {
            const std::uint32_t assigned = cover.assignment[m];
            CHECK(cover.traces[assigned].is_subset_of(f.member(m)));
            for (std::uint32_t t = 0; t < assigned; ++t)
                CHECK_FALSE(cover.traces[t].is_subset_of(f.member(m)));
        }
    }
}

TEST_CASE("pigeonhole_merge block sizes") {
    // Four singleton trace-parts at ell=2: no merging.
    TraceCover four;
    for (ElementId e = 0; e < 4; ++e) four.traces.push_back(MemberSet{e});
    four.assignment = {0, 1, 2, 3};
    CHECK(pigeonhole_merge(four, 2).part_count() == 4);

    // Five nonempty trace-parts at ell=3: 2+2+1.
    TraceCover five;
    for (ElementId e = 0; e < 5; ++e) five.traces.push_back(MemberSet{e});
    five.assignment = {0, 1, 2, 3, 4};
    const Decomposition d = pigeonhole_merge(five, 3);
    REQUIRE(d.part_count() == 3);
    CHECK(d.part_traces[0].size() == 2);
    CHECK(d.part_traces[1].size() == 2);
    CHECK(d.part_traces[2].size() == 1);

    CHECK(pigeonhole_merge(TraceCover{}, 2).part_count() == 0);
}

TEST_CASE("pigeonhole_merge skips empty trace-parts") {
    TraceCover cover;
    for (ElementId e = 0; e < 4; ++e) cover.traces.push_back(MemberSet{e});
    cover.assignment = {3, 3, 0};  // traces 1 and 2 unused
    const Decomposition d = pigeonhole_merge(cover, 3);
    REQUIRE(d.part_count() == 1);
    CHECK(d.parts[0] == std::vector<std::uint32_t>{0, 1, 2});
    REQUIRE(d.part_traces[0].size() == 2);
    CHECK(d.part_traces[0][0] == MemberSet{0});
    CHECK(d.part_traces[0][1] == MemberSet{3});
}

TEST_CASE("decompose: two stars split in two parts within the bound") {
    const SetFamily f = two_star_family();
    const BoundParams p{2, 3, 1, 2};
    const Decomposition d = decompose(f, p);
    REQUIRE(d.part_count() == 2);
    CHECK(d.parts[0] == std::vector<std::uint32_t>{0, 1});
    CHECK(d.parts[1] == std::vector<std::uint32_t>{2, 3});
    CHECK(theorem_bound(p) == 4);  // ceil((3-1)/(2-1) * C(2,1))
    CHECK(verify_decomposition(f, d, p).ok());
}

TEST_CASE("decompose: star family is one part") {
    const SetFamily star = gen_star(11, 3, 1, 9, 17);
    const Decomposition d = decompose(star, {3, 4, 1, 2});
    CHECK(d.part_count() == 1);
}

TEST_CASE("decompose: precondition failure carries the witness") {
    const SetFamily f(2, 7, {MemberSet{1, 2}, MemberSet{3, 4}, MemberSet{5, 6}});
    try {
        decompose(f, {2, 3, 1, 2});
        FAIL("expected NotIntersectingError");
    } catch (const NotIntersectingError& e) {
        CHECK(e.witness_indices() == std::vector<std::uint32_t>{0, 1, 2});
    }
}

TEST_CASE("decompose: mismatched s rejected") {
    CHECK_THROWS_AS(decompose(two_star_family(), BoundParams{3, 3, 1, 2}), DomainError);
}

TEST_CASE("decompose: empty family yields zero parts") {
    const Decomposition d = decompose(SetFamily(3, 5, {}), {3, 4, 2, 2});
    CHECK(d.part_count() == 0);
}

TEST_CASE("theorem pipeline end-to-end on a seeded corpus") {
    SplitMix64 rng(60601);
    int families = 0;
    for (int i = 0; i < 200; ++i) {
        const auto s = static_cast<std::uint32_t>(1 + rng.below(4));
        const auto u = static_cast<std::uint32_t>(1 + rng.below(s));
        const auto k = static_cast<std::uint32_t>(3 + rng.below(3));
        const auto ell = static_cast<std::uint32_t>(2 + rng.below(k - 2));
        const auto n = static_cast<std::uint32_t>(std::max(s + 1, 4u) + rng.below(8));
        const std::optional<SetFamily> f = random_intersecting_family(rng, n, s, 16, k, u);
        if (!f) continue;
        ++families;

        const BoundParams p{s, k, u, ell};
        const Kernel kernel = scattered_kernel(*f, u);
        CHECK(kernel.size() <= k - 1);

        const TraceCover cover = trace_cover(*f, kernel, u);
        CHECK(cover.traces.size() <= kernel.size() * binomial(s, u));

        // Every nonempty trace-part is (2,u)-intersecting by the shared trace.
        std::vector<std::vector<std::uint32_t>> trace_parts(cover.traces.size());
        for (std::uint32_t m = 0; m < f->size(); ++m)
            trace_parts[cover.assignment[m]].push_back(m);
        for (const auto& part : trace_parts)
            if (!part.empty()) CHECK(is_intersecting(f->subfamily(part), 2, u));

        const Decomposition d = decompose(*f, p);
        CHECK(d.part_count() <= theorem_bound(p));
        CHECK(d.part_count() <= f->size());
        CHECK(verify_decomposition(*f, d, p).ok());
    }
    CHECK(families >= 150);
}

TEST_CASE("decompose is byte-deterministic") {
    const SetFamily f = gen_scattered_stars(12, 3, 1, 4, 3, 99);
    const std::string text = serialize_family(f);
    const SetFamily f1 = parse_family(text), f2 = parse_family(text);
    const Decomposition d1 = decompose(f1, {3, 4, 1, 2});
    const Decomposition d2 = decompose(f2, {3, 4, 1, 2});
    CHECK(d1.parts == d2.parts);
    CHECK(d1.part_traces.size() == d2.part_traces.size());
}

TEST_CASE("compact: merges mergeable parts, keeps far stars apart") {
    // Already one part: unchanged.
    const SetFamily star(2, 5, {MemberSet{1, 2}, MemberSet{1, 3}, MemberSet{1, 4}});
    Decomposition one;
    one.parts.push_back({0, 1, 2});
    CHECK(compact(star, one, 2, 1).part_count() == 1);

    // Two parts of one star: union is still a star -> one part.
    Decomposition split;
    split.parts.push_back({0, 1});
    split.parts.push_back({2});
    const Decomposition merged = compact(star, split, 2, 1);
    REQUIRE(merged.part_count() == 1);
    CHECK(merged.parts[0] == std::vector<std::uint32_t>{0, 1, 2});

    // Two far-apart stars stay two parts at ell=2.
    const SetFamily two = two_star_family();
    const Decomposition d = decompose(two, {2, 3, 1, 2});
    const Decomposition compacted = compact(two, d, 2, 1);
    CHECK(compacted.part_count() == 2);

    // Rejects a decomposition that does not verify.
    Decomposition broken;
    broken.parts.push_back({0, 1, 2});  // member 3 missing
    CHECK_THROWS_AS(compact(two, broken, 2, 1), StructureError);
}

TEST_CASE("compact never increases part count and preserves verification") {
    SplitMix64 rng(2424);
    for (int i = 0; i < 60; ++i) {
        const auto s = static_cast<std::uint32_t>(1 + rng.below(3));
        const auto u = static_cast<std::uint32_t>(1 + rng.below(s));
        const auto k = static_cast<std::uint32_t>(3 + rng.below(3));
        const auto ell = static_cast<std::uint32_t>(2 + rng.below(k - 2));
        const auto n = static_cast<std::uint32_t>(std::max(s + 1, 5u) + rng.below(6));
        const std::optional<SetFamily> f = random_intersecting_family(rng, n, s, 12, k, u);
        if (!f || f->empty()) continue;

        const BoundParams p{s, k, u, ell};
        const Decomposition d = decompose(*f, p);
        const Decomposition c = compact(*f, d, ell, u);
        CHECK(c.part_count() <= d.part_count());
        CHECK(verify_decomposition(*f, c, p).ok());
    }
}

TEST_SUITE_END();
