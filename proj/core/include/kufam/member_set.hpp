#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "kufam/bitset.hpp"

namespace kufam {

/// Label of one ground-set element. Valid labels are < n for the family at hand.
using ElementId = std::uint32_t;

/// One member of a family: an immutable set of ground elements.
///
/// Stored as a bitset, so intersection sizes are popcounts. Ordering is
/// lexicographic on the increasing element sequence, which is the canonical
/// order used for members and traces everywhere in the library.
class MemberSet {
public:
    MemberSet() = default;
    explicit MemberSet(std::span<const ElementId> elements) {
        for (ElementId e : elements) bits_.set(e);
        size_ = bits_.count();
    }
    MemberSet(std::initializer_list<ElementId> elements)
        : MemberSet(std::span<const ElementId>(elements.begin(), elements.size())) {}

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool contains(ElementId e) const { return bits_.test(e); }

    /// Elements in ascending order.
    std::vector<ElementId> elements() const { return bits_.positions(); }

    ElementId max_element() const;

    bool is_subset_of(const MemberSet& other) const { return bits_.is_subset_of(other.bits_); }

    const Bitset& bits() const { return bits_; }

    friend std::size_t intersection_size(const MemberSet& a, const MemberSet& b) {
        return a.bits_.intersection_count(b.bits_);
    }

    friend bool operator==(const MemberSet& a, const MemberSet& b) { return a.bits_ == b.bits_; }
    friend std::strong_ordering operator<=>(const MemberSet& a, const MemberSet& b) {
        return lex_compare(a.bits_, b.bits_);
    }

private:
    Bitset bits_;
    std::size_t size_ = 0;
};

/// "{a,b,c}" with ascending elements; used in provenance comments and reports.
std::string format_member(const MemberSet& m);

}  // namespace kufam
