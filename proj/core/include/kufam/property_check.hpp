#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kufam/bitset.hpp"
#include "kufam/bound_params.hpp"
#include "kufam/decomposition.hpp"
#include "kufam/set_family.hpp"

namespace kufam {

/// Graph on member indices with an edge exactly when the two members
/// intersect in fewer than u elements ("far" pairs). No self-loops.
class DisjointnessGraph {
public:
    DisjointnessGraph() = default;
    explicit DisjointnessGraph(std::size_t order)
        : order_(order), rows_(order, Bitset(order)) {}

    std::size_t order() const { return order_; }
    bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    const Bitset& neighbors(std::size_t i) const { return rows_[i]; }
    std::size_t degree(std::size_t i) const { return rows_[i].count(); }

    void add_edge(std::size_t i, std::size_t j) {
        rows_[i].set(j);
        rows_[j].set(i);
    }

    /// Graph induced on the vertices of `keep`, relabeled 0..count-1 in
    /// ascending original order.
    DisjointnessGraph induced(const Bitset& keep) const;

private:
    std::size_t order_ = 0;
    std::vector<Bitset> rows_;
};

DisjointnessGraph disjointness_graph(const SetFamily& family, std::uint32_t u);

/// k member indices that are pairwise far: a violation of (k,u)-intersecting.
struct Witness {
    std::vector<std::uint32_t> indices;  ///< strictly increasing
};

/// Exact decision: no k distinct members are pairwise at intersection < u.
/// Families with fewer than k members are vacuously intersecting.
bool is_intersecting(const SetFamily& family, std::uint32_t k, std::uint32_t u);

/// The lexicographically least k-clique of the disjointness graph, if any.
/// Empty result exactly when is_intersecting holds.
std::optional<Witness> find_witness(const SetFamily& family, std::uint32_t k, std::uint32_t u);

/// Outcome of checking a decomposition against its family.
struct VerifyReport {
    bool covers = false;        ///< union of parts = all member indices
    bool parts_ok = false;      ///< every part (ell,u)-intersecting
    bool within_bound = false;  ///< part count <= theorem bound
    std::optional<std::uint32_t> failing_part;  ///< first part violating parts_ok
    std::optional<Witness> witness;             ///< family-level indices of the violation

    bool ok() const { return covers && parts_ok && within_bound; }
};

/// Checks covers / parts_ok / within_bound for `d` against `family`.
/// params supplies ell and u plus the k needed for the bound; params.s must
/// equal the family's uniformity. Out-of-range part indices -> StructureError.
VerifyReport verify_decomposition(const SetFamily& family, const Decomposition& d,
                                  const BoundParams& params);

// Exact clique primitives shared by the checker and the oracle.

/// True when g contains a clique of `size` vertices.
bool has_clique(const DisjointnessGraph& g, std::size_t size);

/// True when the subgraph induced on `candidates` contains a clique of `size`.
bool has_clique_in(const DisjointnessGraph& g, const Bitset& candidates, std::size_t size);

/// Exact clique number (0 for the empty graph).
std::size_t max_clique_size(const DisjointnessGraph& g);

/// Smallest-last vertex order; ties broken toward lower index.
std::vector<std::uint32_t> degeneracy_order(const DisjointnessGraph& g);

}  // namespace kufam
