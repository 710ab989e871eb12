#include "kufam/property_check.hpp"

#include <algorithm>

#include "kufam/decomposer.hpp"
#include "kufam/errors.hpp"

namespace kufam {

namespace {

void check_threshold(const SetFamily& family, std::uint32_t u) {
    if (u < 1 || u > family.uniformity())
        throw DomainError("u=" + std::to_string(u) + " outside [1," +
                          std::to_string(family.uniformity()) + "]");
}

void check_arity(std::uint32_t k) {
    if (k < 2) throw DomainError("k=" + std::to_string(k) + " below 2");
}

// Is there a clique of `need` vertices inside the candidate set?
// Bron-Kerbosch style branching on P \ N(pivot), early exit on success.
bool exists_clique(const DisjointnessGraph& g, Bitset candidates, std::size_t need) {
    if (need == 0) return true;
    const std::size_t avail = candidates.count();
    if (avail < need) return false;
    if (need == 1) return true;  // avail >= 1 here

    std::size_t pivot = candidates.first();
    std::size_t pivot_score = 0;
    for (std::size_t p = pivot; p != Bitset::npos; p = candidates.next(p + 1)) {
        const std::size_t score = candidates.intersection_count(g.neighbors(p));
        if (score > pivot_score) {
            pivot = p;
            pivot_score = score;
        }
    }

    Bitset branch = candidates;
    branch.and_not(g.neighbors(pivot));
    for (std::size_t v = branch.first(); v != Bitset::npos; v = branch.next(v + 1)) {
        Bitset inner = candidates;
        inner &= g.neighbors(v);
        if (exists_clique(g, std::move(inner), need - 1)) return true;
        candidates.reset(v);
        if (candidates.count() < need) return false;
    }
    return false;
}

}  // namespace

DisjointnessGraph DisjointnessGraph::induced(const Bitset& keep) const {
    const std::vector<std::uint32_t> verts = keep.positions();
    DisjointnessGraph sub(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (adjacent(verts[i], verts[j])) sub.add_edge(i, j);
    return sub;
}

DisjointnessGraph disjointness_graph(const SetFamily& family, std::uint32_t u) {
    check_threshold(family, u);
    DisjointnessGraph g(family.size());
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (intersection_size(family.member(i), family.member(j)) < u) g.add_edge(i, j);
    return g;
}

std::vector<std::uint32_t> degeneracy_order(const DisjointnessGraph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> deg(n);
    std::vector<bool> removed(n, false);
    for (std::size_t i = 0; i < n; ++i) deg[i] = g.degree(i);

    std::vector<std::uint32_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = Bitset::npos;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (best == Bitset::npos || deg[v] < deg[best])) best = v;
        removed[best] = true;
        order.push_back(static_cast<std::uint32_t>(best));
        const Bitset& nb = g.neighbors(best);
        for (std::size_t w = nb.first(); w != Bitset::npos; w = nb.next(w + 1))
            if (!removed[w]) --deg[w];
    }
    return order;
}

bool has_clique_in(const DisjointnessGraph& g, const Bitset& candidates, std::size_t size) {
    return exists_clique(g, candidates, size);
}

bool has_clique(const DisjointnessGraph& g, std::size_t size) {
    if (size == 0) return true;
    if (g.order() < size) return false;

    const std::vector<std::uint32_t> order = degeneracy_order(g);
    std::vector<std::size_t> pos(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

    // Every clique is found from its order-first vertex among later neighbors.
    for (std::uint32_t v : order) {
        Bitset later = g.neighbors(v);
        for (std::size_t w = later.first(); w != Bitset::npos; w = later.next(w + 1))
            if (pos[w] < pos[v]) later.reset(w);
        if (later.count() + 1 < size) continue;
        if (exists_clique(g, later, size - 1)) return true;
    }
    return false;
}

std::size_t max_clique_size(const DisjointnessGraph& g) {
    if (g.order() == 0) return 0;
    std::size_t best = 1;
    while (best < g.order() && has_clique(g, best + 1)) ++best;
    return best;
}

bool is_intersecting(const SetFamily& family, std::uint32_t k, std::uint32_t u) {
    check_arity(k);
    check_threshold(family, u);
    if (family.size() < k) return true;
    return !has_clique(disjointness_graph(family, u), k);
}

std::optional<Witness> find_witness(const SetFamily& family, std::uint32_t k, std::uint32_t u) {
    check_arity(k);
    check_threshold(family, u);
    if (family.size() < k) return std::nullopt;

    const DisjointnessGraph g = disjointness_graph(family, u);
    if (!has_clique(g, k)) return std::nullopt;

    // Build the lexicographically least k-clique position by position: take the
    // smallest vertex that still extends to a full clique among larger indices.
    Witness w;
    Bitset common = Bitset::full(g.order());
    std::size_t from = 0;
    for (std::uint32_t pick = 0; pick < k; ++pick) {
        const std::size_t need = k - pick - 1;
        for (std::size_t v = common.next(from); v != Bitset::npos; v = common.next(v + 1)) {
            Bitset rest = common & g.neighbors(v);
            rest.clear_below(v + 1);
            if (rest.count() >= need && exists_clique(g, rest, need)) {
                w.indices.push_back(static_cast<std::uint32_t>(v));
                common = std::move(rest);
                from = v + 1;
                break;
            }
        }
    }
    if (w.indices.size() != k)
        throw InvariantViolation("witness construction failed despite clique existence");
    return w;
}

VerifyReport verify_decomposition(const SetFamily& family, const Decomposition& d,
                                  const BoundParams& params) {
    params.validate();
    if (params.s != family.uniformity())
        throw DomainError("params.s=" + std::to_string(params.s) + " does not match family s=" +
                          std::to_string(family.uniformity()));

    Bitset covered(family.size());
    for (const auto& part : d.parts)
        for (std::uint32_t idx : part) {
            if (idx >= family.size())
                throw StructureError("part references member index " + std::to_string(idx) +
                                     " outside the family");
            covered.set(idx);
        }

    VerifyReport report;
    report.covers = covered.count() == family.size();

    report.parts_ok = true;
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        std::vector<std::uint32_t> sorted = d.parts[i];
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        const SetFamily sub = family.subfamily(sorted);
        if (std::optional<Witness> bad = find_witness(sub, params.ell, params.u)) {
            report.parts_ok = false;
            report.failing_part = static_cast<std::uint32_t>(i);
            Witness mapped;
            mapped.indices.reserve(bad->indices.size());
            for (std::uint32_t j : bad->indices) mapped.indices.push_back(sorted[j]);
            report.witness = std::move(mapped);
            break;
        }
    }

    report.within_bound = d.part_count() <= theorem_bound(params);
    return report;
}

}  // namespace kufam
