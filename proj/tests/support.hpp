#pragma once

// Shared helpers for the unit and acceptance suites: naive reference oracles
// (kept independent of the library's search paths on purpose) and a small
// subprocess harness for driving the CLI.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "kufam/combinatorics.hpp"
#include "kufam/generators.hpp"
#include "kufam/property_check.hpp"
#include "kufam/rng.hpp"
#include "kufam/set_family.hpp"

namespace testsupport {

// ---- naive reference checks --------------------------------------------------

namespace detail {

// Calls fn on every ascending r-subset of {0..m-1}; stops early on false.
template <typename Fn>
bool for_each_combination(std::size_t m, std::uint32_t r, Fn&& fn) {
    if (r > m) return true;
    std::vector<std::uint32_t> idx(r);
    for (std::uint32_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return false;
        std::int64_t j = static_cast<std::int64_t>(r) - 1;
        while (j >= 0 &&
               idx[static_cast<std::size_t>(j)] == m - r + static_cast<std::size_t>(j))
            --j;
        if (j < 0) return true;
        ++idx[static_cast<std::size_t>(j)];
        for (std::size_t i = static_cast<std::size_t>(j) + 1; i < r; ++i)
            idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace detail

// Direct reading of the definition: every k-tuple of distinct members must
// contain a pair at intersection >= u. No graphs, no pruning.
inline bool naive_is_intersecting(const kufam::SetFamily& family, std::uint32_t k,
                                  std::uint32_t u) {
    return detail::for_each_combination(
        family.size(), k, [&](const std::vector<std::uint32_t>& idx) {
            for (std::uint32_t a = 0; a < k; ++a)
                for (std::uint32_t b = a + 1; b < k; ++b)
                    if (intersection_size(family.member(idx[a]), family.member(idx[b])) >= u)
                        return true;
            return false;
        });
}

// Part check used by the Bell brute force, written tuple-wise so it shares
// nothing with the clique machinery.
inline bool naive_part_ok(const kufam::SetFamily& family,
                          const std::vector<std::uint32_t>& part, std::uint32_t ell,
                          std::uint32_t u) {
    return detail::for_each_combination(
        part.size(), ell, [&](const std::vector<std::uint32_t>& idx) {
            for (std::uint32_t a = 0; a < ell; ++a)
                for (std::uint32_t b = a + 1; b < ell; ++b)
                    if (intersection_size(family.member(part[idx[a]]),
                                          family.member(part[idx[b]])) >= u)
                        return true;
            return false;
        });
}

// Exhaustive minimum over all set partitions (restricted growth strings),
// each part filtered by the naive (ell,u) check. Exponential; |F| <= 10 only.
inline std::uint32_t bell_min_cover(const kufam::SetFamily& family, std::uint32_t ell,
                                    std::uint32_t u) {
    const std::size_t m = family.size();
    if (m == 0) return 0;
    std::vector<std::uint32_t> rgs(m, 0);
    std::uint32_t best = static_cast<std::uint32_t>(m);

    auto try_partition = [&](std::uint32_t blocks) {
        if (blocks >= best) return;
        std::vector<std::vector<std::uint32_t>> parts(blocks);
        for (std::uint32_t v = 0; v < m; ++v) parts[rgs[v]].push_back(v);
        for (const auto& part : parts)
            if (!naive_part_ok(family, part, ell, u)) return;
        best = blocks;
    };

    auto rec = [&](auto&& self, std::size_t v, std::uint32_t used) -> void {
        if (v == m) {
            try_partition(used);
            return;
        }
        for (std::uint32_t label = 0; label <= used && label < best; ++label) {
            rgs[v] = label;
            self(self, v + 1, std::max(used, label + 1));
        }
    };
    rec(rec, 0, 0);
    return best;
}

// ---- seeded corpus helpers ----------------------------------------------------

// A random family that is (k,u)-intersecting, by rejection; shrinks the draw
// when rejection keeps failing so the helper always terminates.
inline std::optional<kufam::SetFamily> random_intersecting_family(
    kufam::SplitMix64& rng, std::uint32_t n, std::uint32_t s, std::uint32_t count,
    std::uint32_t k, std::uint32_t u) {
    auto size = std::min<std::uint64_t>(count, kufam::binomial(n, s));
    while (size >= 1) {
        for (int attempt = 0; attempt < 60; ++attempt) {
            kufam::SetFamily f =
                kufam::gen_random(n, s, static_cast<std::uint32_t>(size), rng.next());
            if (kufam::is_intersecting(f, k, u)) return f;
        }
        --size;
    }
    return std::nullopt;
}

// ---- CLI subprocess harness ---------------------------------------------------

struct CliResult {
    int exit_code = -1;
    std::string out;
};

/// Runs `command` through the shell, capturing stdout. stderr passes through.
inline CliResult run_command(const std::string& command) {
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    std::array<char, 4096> chunk{};
    std::size_t got = 0;
    while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
        result.out.append(chunk.data(), got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

/// Path to the kufam binary, from the KUFAM_CLI environment variable.
inline const char* cli_path() { return std::getenv("KUFAM_CLI"); }

}  // namespace testsupport
