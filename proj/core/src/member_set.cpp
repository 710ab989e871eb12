#include "kufam/member_set.hpp"

#include "kufam/errors.hpp"

namespace kufam {

ElementId MemberSet::max_element() const {
    if (empty()) throw DomainError("max_element of an empty set");
    std::size_t last = Bitset::npos;
    for (std::size_t p = bits_.first(); p != Bitset::npos; p = bits_.next(p + 1)) last = p;
    return static_cast<ElementId>(last);
}

std::string format_member(const MemberSet& m) {
    std::string out = "{";
    bool sep = false;
    for (ElementId e : m.elements()) {
        if (sep) out += ',';
        out += std::to_string(e);
        sep = true;
    }
    out += '}';
    return out;
}

}  // namespace kufam
