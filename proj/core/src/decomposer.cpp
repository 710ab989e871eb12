#include "kufam/decomposer.hpp"

#include <algorithm>
#include <limits>

#include "kufam/combinatorics.hpp"
#include "kufam/errors.hpp"
#include "kufam/property_check.hpp"

namespace kufam {

namespace {

// covers + parts_ok, without the bound (k is not known here).
void require_valid_cover(const SetFamily& family, const Decomposition& d, std::uint32_t ell,
                         std::uint32_t u) {
    Bitset covered(family.size());
    for (const auto& part : d.parts)
        for (std::uint32_t idx : part) {
            if (idx >= family.size())
                throw StructureError("part references member index " + std::to_string(idx) +
                                     " outside the family");
            covered.set(idx);
        }
    if (covered.count() != family.size())
        throw StructureError("decomposition does not cover the family");
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        if (!is_intersecting(family.subfamily(d.parts[i]), ell, u))
            throw StructureError("part " + std::to_string(i) + " is not (" +
                                 std::to_string(ell) + "," + std::to_string(u) +
                                 ")-intersecting");
    }
}

}  // namespace

std::uint64_t theorem_bound(const BoundParams& p) {
    p.validate();
    const std::uint64_t per_kernel = binomial(p.s, p.u);
    std::uint64_t numer;
    if (__builtin_mul_overflow(static_cast<std::uint64_t>(p.k - 1), per_kernel, &numer) ||
        numer > std::numeric_limits<std::uint64_t>::max() - (p.ell - 2))
        throw OverflowError("theorem bound overflows 64-bit arithmetic");
    return (numer + (p.ell - 2)) / (p.ell - 1);
}

Kernel scattered_kernel(const SetFamily& family, std::uint32_t u) {
    if (u < 1 || u > family.uniformity())
        throw DomainError("u=" + std::to_string(u) + " outside [1," +
                          std::to_string(family.uniformity()) + "]");
    Kernel kernel;
    for (std::size_t i = 0; i < family.size(); ++i) {
        bool scattered = true;
        for (std::uint32_t j : kernel.indices)
            if (intersection_size(family.member(i), family.member(j)) >= u) {
                scattered = false;
                break;
            }
        if (scattered) kernel.indices.push_back(static_cast<std::uint32_t>(i));
    }
    return kernel;
}

TraceCover trace_cover(const SetFamily& family, const Kernel& kernel, std::uint32_t u) {
    if (u < 1 || u > family.uniformity())
        throw DomainError("u=" + std::to_string(u) + " outside [1," +
                          std::to_string(family.uniformity()) + "]");
    for (std::uint32_t i : kernel.indices)
        if (i >= family.size())
            throw StructureError("kernel index " + std::to_string(i) + " outside the family");

    TraceCover cover;
    for (std::uint32_t i : kernel.indices) {
        const std::vector<MemberSet> subs = u_subsets(family.member(i), u);
        cover.traces.insert(cover.traces.end(), subs.begin(), subs.end());
    }
    std::sort(cover.traces.begin(), cover.traces.end());
    cover.traces.erase(std::unique(cover.traces.begin(), cover.traces.end()),
                       cover.traces.end());

    cover.assignment.resize(family.size());
    for (std::size_t m = 0; m < family.size(); ++m) {
        bool assigned = false;
        for (std::size_t t = 0; t < cover.traces.size(); ++t)
            if (cover.traces[t].is_subset_of(family.member(m))) {
                cover.assignment[m] = static_cast<std::uint32_t>(t);
                assigned = true;
                break;
            }
        if (!assigned)
            throw KernelCoverageError("member " + format_member(family.member(m)) +
                                      " contains no kernel trace");
    }
    return cover;
}

Decomposition pigeonhole_merge(const TraceCover& cover, std::uint32_t ell) {
    if (ell < 2) throw DomainError("ell must be >= 2");

    std::vector<std::vector<std::uint32_t>> trace_parts(cover.traces.size());
    for (std::size_t m = 0; m < cover.assignment.size(); ++m)
        trace_parts[cover.assignment[m]].push_back(static_cast<std::uint32_t>(m));

    Decomposition d;
    const std::uint32_t block = ell - 1;
    std::uint32_t in_block = 0;
    for (std::size_t t = 0; t < trace_parts.size(); ++t) {
        if (trace_parts[t].empty()) continue;
        if (in_block == 0) {
            d.parts.emplace_back();
            d.part_traces.emplace_back();
        }
        auto& part = d.parts.back();
        part.insert(part.end(), trace_parts[t].begin(), trace_parts[t].end());
        d.part_traces.back().push_back(cover.traces[t]);
        in_block = (in_block + 1) % block;
    }
    for (auto& part : d.parts) std::sort(part.begin(), part.end());
    return d;
}

Decomposition decompose(const SetFamily& family, const BoundParams& p) {
    p.validate();
    if (p.s != family.uniformity())
        throw DomainError("params.s=" + std::to_string(p.s) + " does not match family s=" +
                          std::to_string(family.uniformity()));

    if (std::optional<Witness> w = find_witness(family, p.k, p.u))
        throw NotIntersectingError("family is not (" + std::to_string(p.k) + "," +
                                       std::to_string(p.u) + ")-intersecting",
                                   std::move(w->indices));

    const Kernel kernel = scattered_kernel(family, p.u);
    if (kernel.size() > p.k - 1)
        throw InvariantViolation("scattered kernel larger than k-1 on an intersecting family");

    const TraceCover cover = trace_cover(family, kernel, p.u);
    Decomposition d = pigeonhole_merge(cover, p.ell);
    if (d.part_count() > theorem_bound(p) || d.part_count() > family.size())
        throw InvariantViolation("decomposition exceeds the theorem bound");
    return d;
}

Decomposition compact(const SetFamily& family, const Decomposition& d, std::uint32_t ell,
                      std::uint32_t u) {
    if (ell < 2) throw DomainError("ell must be >= 2");
    require_valid_cover(family, d, ell, u);

    Decomposition out = d;
    if (out.part_traces.size() != out.parts.size())
        out.part_traces.assign(out.parts.size(), {});

    std::size_t j = 1;
    while (j < out.parts.size()) {
        bool merged = false;
        for (std::size_t i = 0; i < j; ++i) {
            std::vector<std::uint32_t> joint = out.parts[i];
            joint.insert(joint.end(), out.parts[j].begin(), out.parts[j].end());
            if (is_intersecting(family.subfamily(joint), ell, u)) {
                std::sort(joint.begin(), joint.end());
                joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
                out.parts[i] = std::move(joint);
                auto& traces = out.part_traces[i];
                traces.insert(traces.end(), out.part_traces[j].begin(),
                              out.part_traces[j].end());
                out.parts.erase(out.parts.begin() + static_cast<std::ptrdiff_t>(j));
                out.part_traces.erase(out.part_traces.begin() +
                                      static_cast<std::ptrdiff_t>(j));
                merged = true;
                break;
            }
        }
        if (!merged) ++j;
    }
    return out;
}

}  // namespace kufam
