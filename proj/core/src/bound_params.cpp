#include "kufam/bound_params.hpp"

#include <string>

#include "kufam/errors.hpp"

namespace kufam {

void BoundParams::validate() const {
    if (s < 1) throw DomainError("s must be >= 1");
    if (u < 1 || u > s)
        throw DomainError("u=" + std::to_string(u) + " outside [1," + std::to_string(s) + "]");
    if (ell < 2) throw DomainError("ell must be >= 2");
    if (ell >= k)
        throw DomainError("ell=" + std::to_string(ell) + " must be < k=" + std::to_string(k));
}

}  // namespace kufam
