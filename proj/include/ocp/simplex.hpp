#pragma once

#include <vector>

#include "ocp/rational.hpp"

namespace ocp {

// Decides whether { x >= 0 : A x = b } is nonempty, by a phase-one
// simplex over exact rationals with Bland's least-index rule, so the
// answer is exact and the pivot path deterministic.
bool rational_feasible(const std::vector<RationalVector>& rows, const RationalVector& rhs);

}  // namespace ocp
