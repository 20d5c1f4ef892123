#pragma once

#include <cstdint>
#include <vector>

#include "spatialvote/election.hpp"
#include "spatialvote/point.hpp"

namespace spatialvote {

/// Outward normal of the tangent hyperplane of the unit lp sphere scaled to
/// pass through `offset` (which must be nonzero): component j is
/// sign(z_j) * |z_j|^(p-1). A challenger direction y gains the voter behind
/// `offset` for small enough step iff normal . y > 0.
RatVec tangent_normal(const RatVec& offset, int p);

/// Central hyperplane arrangement of a single-candidate instance, anchored
/// at the candidate. Voters co-located with the candidate are unwinnable and
/// are skipped; `voters` maps each normal back to its instance index.
struct CentralArrangement {
  int dim = 0;
  std::vector<RatVec> normals;
  std::vector<int> voters;
};

CentralArrangement single_arrangement(const ElectionInstance& inst);

/// A direction off every hyperplane of the arrangement: tries unit vectors,
/// then points on the moment curve (1, t, t^2, ...) for t = 2, 3, ... Each
/// normal kills at most dim-1 curve points, so few tries suffice.
RatVec generic_direction(const CentralArrangement& arr);

struct RegionRecord {
  std::vector<int8_t> signs;  // one per arrangement normal, +1 or -1
  RatVec direction;           // strictly inside the region's cone
};

struct EnumerateOptions {
  bool collect_regions = false;
};

struct EnumerateResult {
  std::vector<int8_t> best_signs;
  RatVec best_direction;
  long long best_positive = 0;
  long long regions_visited = 0;
  std::vector<RegionRecord> regions;  // filled only when collecting
};

/// Breadth-first walk over the full-dimensional cones of the arrangement,
/// flipping one sign at a time and testing feasibility exactly. Visits every
/// cone exactly once; works in any dimension.
EnumerateResult enumerate_regions(const CentralArrangement& arr,
                                  const EnumerateOptions& opts = {});

/// Planar specialization: one half-turn sweep of a directed line through the
/// origin, processing crossing events in decreasing-slope order and walking
/// the circle of directions in two symmetric halves. Linearithmic in the
/// number of normals.
EnumerateResult radial_sweep_2d(const CentralArrangement& arr,
                                const EnumerateOptions& opts = {});

/// Shrinks a strictly feasible direction y until the point lands inside
/// every ball centered at the given voter offsets with the anchor on the
/// boundary. The shrink factor is chosen in closed form from the tangent
/// data; if exact verification still fails the factor is halved (with a
/// diagnostic) until it passes.
RatVec scale_into_balls(const std::vector<RatVec>& offsets, int p, const RatVec& y);

enum class SingleMethod { kAuto, kSweep2d, kRegions };

/// Optimal challenger placement against one incumbent. kAuto routes d == 2
/// to the sweep and everything else, d == 1 included, to region enumeration.
SolveResult solve_single(const ElectionInstance& inst,
                         SingleMethod method = SingleMethod::kAuto);

/// Places the challenger at the better of +y/-y for a generic direction y,
/// which always wins at least half of the winnable voters.
SolveResult two_approx(const ElectionInstance& inst);

}  // namespace spatialvote
