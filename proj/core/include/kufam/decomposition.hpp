#pragma once

#include <cstdint>
#include <vector>

#include "kufam/member_set.hpp"

namespace kufam {

/// An ordered partition of a family's member indices into labeled parts.
///
/// `part_traces` records provenance: the u-element traces whose trace-parts
/// were merged into each part. It is empty for partitions that were not
/// produced by the trace pipeline (oracle witnesses, hand-built inputs).
struct Decomposition {
    std::vector<std::vector<std::uint32_t>> parts;    ///< member indices, ascending
    std::vector<std::vector<MemberSet>> part_traces;  ///< per-part merged traces (may be empty)

    std::size_t part_count() const { return parts.size(); }
};

}  // namespace kufam
