#pragma once

#include <optional>
#include <vector>

#include "spatialvote/point.hpp"

namespace spatialvote {

/// Decides whether the strict homogeneous system  row_j . y > 0  (all j) has
/// a solution, in exact rational arithmetic. On success returns a witness
/// scaled so that row_j . y >= 1 for every row; the witness is re-verified by
/// substitution before it is returned. Infeasibility returns nullopt and is
/// backed by a nonnegative combination of the rows summing to zero (checked
/// internally). An all-zero row makes the system infeasible; with no rows
/// the first unit vector is returned.
///
/// Pivoting uses Bland's rule, so the fully degenerate tableau cannot cycle.
std::optional<RatVec> strict_homogeneous_lp(const std::vector<RatVec>& rows, int dim);

}  // namespace spatialvote
