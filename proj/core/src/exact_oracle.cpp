#include "kufam/exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <span>

#include "kufam/combinatorics.hpp"
#include "kufam/decomposer.hpp"
#include "kufam/errors.hpp"
#include "kufam/generators.hpp"
#include "kufam/rng.hpp"

namespace kufam {

namespace {

// Adding v keeps the part K_ell-free iff its close neighborhood inside the
// part holds no (ell-1)-clique.
bool can_join(const DisjointnessGraph& g, const Bitset& part, std::size_t v, std::uint32_t ell) {
    Bitset close = part & g.neighbors(v);
    if (ell == 2) return close.none();
    return !has_clique_in(g, close, ell - 1);
}

struct MinPartsSearch {
    const DisjointnessGraph& g;
    std::uint32_t ell;
    std::vector<std::uint32_t> order;  // assignment order
    std::vector<Bitset> parts;
    std::uint32_t best;
    std::uint32_t lower_bound;
    std::uint64_t nodes = 0;

    MinPartsSearch(const DisjointnessGraph& graph, std::uint32_t l, std::uint32_t upper,
                   std::uint32_t lower)
        : g(graph), ell(l), best(upper), lower_bound(lower) {
        // Reverse degeneracy removal order: each vertex sees few assigned neighbors.
        const std::vector<std::uint32_t> removal = degeneracy_order(g);
        order.assign(removal.rbegin(), removal.rend());
        parts.assign(g.order(), Bitset(g.order()));
    }

    void run(std::size_t i, std::uint32_t used) {
        ++nodes;
        if (used >= best || best == lower_bound) return;
        if (i == order.size()) {
            best = used;
            return;
        }
        const std::uint32_t v = order[i];
        for (std::uint32_t p = 0; p < used; ++p) {
            if (can_join(g, parts[p], v, ell)) {
                parts[p].set(v);
                run(i + 1, used);
                parts[p].reset(v);
                if (best == lower_bound) return;
            }
        }
        if (used + 1 < best) {
            parts[used].set(v);
            run(i + 1, used + 1);
            parts[used].reset(v);
        }
    }
};

// First (= lexicographically least) restricted-growth assignment of vertices
// 0..n-1 into at most `target` feasible parts.
struct LexAssignment {
    const DisjointnessGraph& g;
    std::uint32_t ell;
    std::uint32_t target;
    std::vector<Bitset> parts;
    std::vector<std::uint32_t> labels;
    std::uint64_t nodes = 0;

    LexAssignment(const DisjointnessGraph& graph, std::uint32_t l, std::uint32_t t)
        : g(graph), ell(l), target(t), parts(t, Bitset(graph.order())), labels(graph.order()) {}

    bool run(std::size_t v, std::uint32_t used) {
        ++nodes;
        if (v == g.order()) return true;
        const std::uint32_t limit = std::min(used, target - 1);
        for (std::uint32_t label = 0; label <= limit; ++label) {
            if (label < used && !can_join(g, parts[label], v, ell)) continue;
            parts[label].set(v);
            labels[v] = label;
            if (run(v + 1, std::max(used, label + 1))) return true;
            parts[label].reset(v);
        }
        return false;
    }
};

Decomposition partition_from_labels(const std::vector<std::uint32_t>& labels,
                                    std::uint32_t part_count) {
    Decomposition d;
    d.parts.assign(part_count, {});
    for (std::size_t v = 0; v < labels.size(); ++v)
        d.parts[labels[v]].push_back(static_cast<std::uint32_t>(v));
    return d;
}

void check_oracle_domain(const SetFamily& family, std::uint32_t ell, std::uint32_t u,
                         const OracleOptions& options) {
    if (ell < 2) throw DomainError("ell must be >= 2");
    if (u < 1 || u > family.uniformity())
        throw DomainError("u=" + std::to_string(u) + " outside [1," +
                          std::to_string(family.uniformity()) + "]");
    if (family.size() > options.cap)
        throw CapacityError("family size " + std::to_string(family.size()) +
                            " exceeds the exact-oracle cap " + std::to_string(options.cap));
}

}  // namespace

OracleResult min_cover_exact(const SetFamily& family, std::uint32_t ell, std::uint32_t u,
                             const OracleOptions& options) {
    check_oracle_domain(family, ell, u, options);

    OracleResult result;
    if (family.empty()) return result;

    const DisjointnessGraph g = disjointness_graph(family, u);
    const std::size_t omega = max_clique_size(g);
    if (omega < ell) {
        result.minimum = 1;
        result.optimal_parts.parts.emplace_back();
        for (std::uint32_t i = 0; i < family.size(); ++i)
            result.optimal_parts.parts[0].push_back(i);
        return result;
    }

    // The family is (omega+1, u)-intersecting and ell <= omega < omega+1, so
    // the constructive pipeline applies and seeds the incumbent.
    const BoundParams params{family.uniformity(), static_cast<std::uint32_t>(omega) + 1, u, ell};
    const Decomposition constructive = decompose(family, params);
    const auto upper = static_cast<std::uint32_t>(constructive.part_count());
    const auto lower =
        static_cast<std::uint32_t>((omega + ell - 2) / (ell - 1));  // clique pigeonhole

    MinPartsSearch search(g, ell, upper, lower);
    if (upper > lower) search.run(0, 0);
    result.minimum = search.best;
    result.explored = search.nodes;

    LexAssignment lex(g, ell, result.minimum);
    if (!lex.run(0, 0))
        throw InvariantViolation("no optimal assignment found at the proven minimum");
    result.explored += lex.nodes;
    result.optimal_parts = partition_from_labels(lex.labels, result.minimum);
    return result;
}

std::uint32_t chromatic_number(const DisjointnessGraph& g, std::size_t cap) {
    if (g.order() > cap)
        throw CapacityError("graph order " + std::to_string(g.order()) +
                            " exceeds the chromatic-number cap " + std::to_string(cap));
    const std::size_t n = g.order();
    if (n == 0) return 0;

    std::vector<std::uint32_t> color(n, 0);  // 0 = uncolored
    std::uint32_t best = static_cast<std::uint32_t>(n) + 1;

    // DSATUR branching: always color the uncolored vertex with the most
    // distinct neighbor colors; ties to higher degree, then lower index.
    auto pick = [&]() -> std::size_t {
        std::size_t chosen = n;
        std::size_t chosen_sat = 0, chosen_deg = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] != 0) continue;
            Bitset seen;
            const Bitset& nb = g.neighbors(v);
            std::size_t sat = 0;
            for (std::size_t w = nb.first(); w != Bitset::npos; w = nb.next(w + 1))
                if (color[w] != 0 && !seen.test(color[w])) {
                    seen.set(color[w]);
                    ++sat;
                }
            const std::size_t deg = g.degree(v);
            if (chosen == n || sat > chosen_sat || (sat == chosen_sat && deg > chosen_deg)) {
                chosen = v;
                chosen_sat = sat;
                chosen_deg = deg;
            }
        }
        return chosen;
    };

    auto feasible = [&](std::size_t v, std::uint32_t c) {
        const Bitset& nb = g.neighbors(v);
        for (std::size_t w = nb.first(); w != Bitset::npos; w = nb.next(w + 1))
            if (color[w] == c) return false;
        return true;
    };

    auto dfs = [&](auto&& self, std::size_t colored, std::uint32_t used) -> void {
        if (used >= best) return;
        if (colored == n) {
            best = used;
            return;
        }
        const std::size_t v = pick();
        for (std::uint32_t c = 1; c <= std::min(used + 1, best - 1); ++c) {
            if (!feasible(v, c)) continue;
            color[v] = c;
            self(self, colored + 1, std::max(used, c));
            color[v] = 0;
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

namespace {

// ---- exhaustive extremal search over member-subset masks -------------------

struct MaskUniverse {
    std::vector<MemberSet> members;           // all C(n,s) possible members, canonical order
    std::vector<std::uint32_t> far;           // far[i] = mask of members at intersection < u
    std::vector<std::vector<std::uint8_t>> slot_perm;  // member relabeling per ground permutation
};

MaskUniverse build_universe(std::uint32_t n, const BoundParams& p) {
    MaskUniverse uni;
    std::vector<ElementId> ground(n);
    std::iota(ground.begin(), ground.end(), 0);
    uni.members = u_subsets(MemberSet{std::span<const ElementId>(ground)}, p.s);

    const std::size_t m = uni.members.size();
    uni.far.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (intersection_size(uni.members[i], uni.members[j]) < p.u) {
                uni.far[i] |= 1u << j;
                uni.far[j] |= 1u << i;
            }

    // Index lookup by element mask (n <= 8 here, so an element mask fits a byte table).
    std::vector<std::uint32_t> index_of(std::size_t{1} << n, 0);
    auto element_mask = [](const MemberSet& ms) {
        std::uint32_t em = 0;
        for (ElementId e : ms.elements()) em |= 1u << e;
        return em;
    };
    for (std::size_t i = 0; i < m; ++i) index_of[element_mask(uni.members[i])] = i;

    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::uint8_t> slots(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::uint32_t em = 0;
            for (ElementId e : uni.members[i].elements()) em |= 1u << perm[e];
            slots[i] = static_cast<std::uint8_t>(index_of[em]);
        }
        uni.slot_perm.push_back(std::move(slots));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return uni;
}

bool mask_has_clique(const std::vector<std::uint32_t>& far, std::uint32_t mask,
                     std::uint32_t need) {
    if (need == 0) return true;
    if (static_cast<std::uint32_t>(std::popcount(mask)) < need) return false;
    const auto v = static_cast<std::uint32_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & (mask - 1);
    return mask_has_clique(far, rest & far[v], need - 1) || mask_has_clique(far, rest, need);
}

bool mask_is_canonical(const MaskUniverse& uni, std::uint32_t mask) {
    for (const auto& slots : uni.slot_perm) {
        std::uint32_t permuted = 0;
        for (std::uint32_t rem = mask; rem != 0; rem &= rem - 1)
            permuted |= 1u << slots[static_cast<std::uint32_t>(std::countr_zero(rem))];
        if (permuted < mask) return false;
    }
    return true;
}

SetFamily family_from_mask(const MaskUniverse& uni, std::uint32_t mask, std::uint32_t s,
                           std::uint32_t n) {
    std::vector<MemberSet> members;
    for (std::uint32_t rem = mask; rem != 0; rem &= rem - 1)
        members.push_back(uni.members[static_cast<std::uint32_t>(std::countr_zero(rem))]);
    return SetFamily(s, n, std::move(members));
}

SearchReport exhaustive_search(std::uint32_t n, const BoundParams& p,
                               const SearchOptions& options) {
    const std::uint64_t universe = binomial(n, p.s);
    if (universe > 20 || n > 8)
        throw CapacityError("exhaustive search envelope is C(n,s) <= 20 and n <= 8");

    SearchReport report;
    report.seed = options.seed;
    report.exhaustive = true;
    report.witness_family = SetFamily(p.s, n, {});

    const MaskUniverse uni = build_universe(n, p);
    const auto m = static_cast<std::uint32_t>(uni.members.size());
    const std::uint64_t bound = theorem_bound(p);

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        const auto fam_mask = static_cast<std::uint32_t>(mask);
        if (mask_has_clique(uni.far, fam_mask, p.k)) continue;  // not (k,u)-intersecting
        if (!mask_is_canonical(uni, fam_mask)) continue;

        const SetFamily family = family_from_mask(uni, fam_mask, p.s, n);
        const OracleResult oracle =
            min_cover_exact(family, p.ell, p.u, {std::max<std::size_t>(options.oracle_cap, m)});
        ++report.families_examined;

        if (oracle.minimum > report.best_value) {
            report.best_value = oracle.minimum;
            report.witness_family = family;
            if (report.best_value > bound)
                throw InvariantViolation("search exceeded the theorem bound: bug");
        }
        if (options.budget != 0 && report.families_examined >= options.budget &&
            mask + 1 < (std::uint64_t{1} << m)) {
            report.budget_exhausted = true;
            break;
        }
    }
    return report;
}

// ---- randomized hill-climb with restarts -----------------------------------

SearchReport hill_climb_search(std::uint32_t n, const BoundParams& p,
                               const SearchOptions& options) {
    SearchReport report;
    report.seed = options.seed;
    report.witness_family = SetFamily(p.s, n, {});

    const std::uint64_t budget = options.budget == 0 ? 2000 : options.budget;
    const std::uint64_t bound = theorem_bound(p);
    const std::uint64_t universe = binomial(n, p.s);
    const std::uint64_t max_size =
        std::min<std::uint64_t>(options.oracle_cap, universe);
    if (max_size == 0) throw DomainError("no s-subsets exist over this ground set");

    SplitMix64 rng(options.seed);
    const OracleOptions oracle_options{options.oracle_cap};

    auto evaluate = [&](const SetFamily& family) {
        const OracleResult r = min_cover_exact(family, p.ell, p.u, oracle_options);
        ++report.families_examined;
        if (r.minimum > report.best_value) {
            report.best_value = r.minimum;
            report.witness_family = family;
            if (report.best_value > bound)
                throw InvariantViolation("search exceeded the theorem bound: bug");
        }
        return r.minimum;
    };

    auto random_member = [&]() {
        return gen_random(n, p.s, 1, rng.next()).member(0);
    };

    auto random_intersecting = [&]() -> SetFamily {
        auto size = static_cast<std::uint32_t>(1 + rng.below(max_size));
        while (true) {
            for (int attempt = 0; attempt < 40; ++attempt) {
                SetFamily candidate = gen_random(n, p.s, size, rng.next());
                if (is_intersecting(candidate, p.k, p.u)) return candidate;
            }
            if (size == 1) return gen_random(n, p.s, 1, rng.next());
            --size;  // large random families are rarely intersecting; back off
        }
    };

    while (report.families_examined < budget) {
        SetFamily current = random_intersecting();
        std::uint32_t current_value = evaluate(current);
        std::uint32_t stall = 0;

        while (report.families_examined < budget && stall < 25) {
            std::vector<MemberSet> members = current.members();
            const std::uint64_t move = rng.below(3);
            if (move == 0 && members.size() < max_size) {
                members.push_back(random_member());
            } else if (move == 1 && members.size() > 1) {
                members.erase(members.begin() +
                              static_cast<std::ptrdiff_t>(rng.below(members.size())));
            } else if (!members.empty()) {
                members[rng.below(members.size())] = random_member();
            }
            SetFamily proposal(p.s, n, std::move(members));
            if (proposal == current || !is_intersecting(proposal, p.k, p.u)) {
                ++stall;
                continue;
            }
            const std::uint32_t value = evaluate(proposal);
            if (value > current_value) {
                current = std::move(proposal);
                current_value = value;
                stall = 0;
            } else if (value == current_value) {
                current = std::move(proposal);  // sideways move
                ++stall;
            } else {
                ++stall;
            }
        }
    }
    report.budget_exhausted = true;
    return report;
}

}  // namespace

SearchReport extremal_search(std::uint32_t n, const BoundParams& p,
                             const SearchOptions& options) {
    p.validate();
    if (n < p.s)
        throw DomainError("ground set [0," + std::to_string(n) +
                          ") cannot host s=" + std::to_string(p.s) + " subsets");
    return options.exhaustive ? exhaustive_search(n, p, options)
                              : hill_climb_search(n, p, options);
}

}  // namespace kufam
