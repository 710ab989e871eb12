#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kufam/member_set.hpp"

namespace kufam {

/// A deduplicated, canonically ordered collection of equal-size member sets
/// over the ground set [0, n).
class SetFamily {
public:
    /// Empty family over the trivial ground set (s=1, n=1).
    SetFamily() = default;

    /// Validates, sorts into canonical order, and collapses duplicates.
    /// Throws DomainError when s or n is zero, a member has the wrong size,
    /// or an element is >= n.
    SetFamily(std::uint32_t s, std::uint32_t n, std::vector<MemberSet> members);

    std::uint32_t uniformity() const { return s_; }
    std::uint32_t ground_size() const { return n_; }

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    const MemberSet& member(std::size_t i) const { return members_[i]; }
    const std::vector<MemberSet>& members() const { return members_; }

    /// Family over the same ground set restricted to the given member indices.
    SetFamily subfamily(std::span<const std::uint32_t> indices) const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    std::uint32_t s_ = 1;
    std::uint32_t n_ = 1;
    std::vector<MemberSet> members_;
};

/// Parses the family file format:
///   - one member per line, whitespace-separated non-negative integers;
///   - '#' starts a comment; blank lines are ignored;
///   - optional first line `%% s=<int> n=<int>` fixing uniformity/ground size
///     (required for empty families; n defaults to s when omitted there).
/// s is otherwise inferred from the first member, n as 1 + max element.
SetFamily parse_family(std::string_view text);

/// Canonical text form: members in canonical order, elements ascending,
/// single-space separated. Emits the `%%` header exactly when re-parsing
/// would otherwise infer different s/n (empty family, or unused top elements).
std::string serialize_family(const SetFamily& family);

}  // namespace kufam
