#pragma once

#include <cstdint>

namespace kufam {

/// The four parameters of the decomposition bound.
/// Valid when 1 <= u <= s and 2 <= ell < k (which forces k >= 3).
struct BoundParams {
    std::uint32_t s = 1;    ///< uniformity
    std::uint32_t k = 3;    ///< outer intersection arity
    std::uint32_t u = 1;    ///< intersection threshold
    std::uint32_t ell = 2;  ///< target arity

    /// Throws DomainError when any invariant fails.
    void validate() const;
};

}  // namespace kufam
