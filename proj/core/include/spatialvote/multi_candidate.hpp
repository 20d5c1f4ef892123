#pragma once

#include <optional>
#include <vector>

#include "spatialvote/election.hpp"
#include "spatialvote/geometry.hpp"
#include "spatialvote/quadext.hpp"

namespace spatialvote {

/// Weighted arrangement of Euclidean open balls in R^dim. The recursive
/// solver restricts itself to the affine subspace cut out by the radical
/// hyperplanes in `subspace` (empty at the top level); their normals are
/// linearly independent and every center lies on all of them.
struct BallArrangement {
  int dim = 0;
  std::vector<OpenBall> balls;  // norm_exp == 2
  std::vector<long> weights;    // positive multiplicities, parallel to balls
  std::vector<Hyperplane> subspace;
};

BallArrangement arrangement_from_instance(const ElectionInstance& inst);
BallArrangement arrangement_from_weighted(const std::vector<WeightedBall>& balls, int dim);

enum class BallRelation {
  kDisjoint,         // open balls share no point (external tangency included)
  kProperIntersect,  // overlap with neither containing the other
  kB1InsideB2,
  kB2InsideB1,
  kEqual,
};

/// Exact classification of two open Euclidean balls with positive radii.
/// All comparisons happen on squared quantities; the mixed term 2*r1*r2
/// enters through a quadratic-extension sign.
BallRelation nesting_predicate(const OpenBall& b1, const OpenBall& b2);

/// Hyperplane through the intersection of the two boundary spheres, as
/// 2(c2 - c1) . x = (|c2|^2 - r2^2) - (|c1|^2 - r1^2). Empty when the
/// spheres do not meet (disjoint or strictly nested); tangent spheres still
/// define it. Concentric equal balls are degenerate and rejected.
std::optional<Hyperplane> radical_hyperplane(const OpenBall& b1, const OpenBall& b2);

/// One endpoint of a circle-circle crossing: the point anchor + scale *
/// direction, where scale is +-sqrt of the (rational) discriminant. Both
/// crossing points share anchor and direction and differ in the sign.
struct ArcPoint {
  RatPoint anchor;
  RatVec direction;
  QE2 scale;
  int partner = -1;  // ball whose boundary is crossed
};

/// Planar solver: sweeps every circle's crossing points in angular order and
/// samples each arc, plus every center, and reports the maximum total weight
/// of balls with a common interior point. Requires effective dimension 2
/// (ambient dimension minus subspace cuts). The witness is a rational point
/// verified exactly; nu carries the weight, voter_set the arrangement
/// indices containing the witness. All-empty input yields weight 0 and no
/// witness.
SolveResult modified_balls1(const BallArrangement& arr);

/// Exact maximum-weight common-interior-point solver in any dimension >= 2:
/// recurses over the radical hyperplane of every properly intersecting pair
/// (projected centers stay rational, radii enter squared), with a nesting
/// scan covering optima whose region boundary is a single sphere. Effective
/// dimension 2 delegates to modified_balls1. `threads` parallelizes the
/// top-level pair branches; results are reduced in pair order, so the
/// outcome does not depend on the thread count.
SolveResult modified_balls3(const BallArrangement& arr, int threads = 1);

enum class MultiMethod { kAuto, kBalls1, kBalls3 };

/// Maximum-weight common-interior point of a weighted ball multiset (p = 2,
/// duplicates merged, one-dimensional input lifted to a plane and the
/// witness projected back). nu carries the best weight; voter_set refers to
/// the merged arrangement. Backs both the election solvers and positional
/// scoring.
SolveResult solve_weighted_balls(const std::vector<WeightedBall>& balls, int dim,
                                 MultiMethod method = MultiMethod::kAuto, int threads = 1);

/// Optimal challenger placement against any number of incumbents, p = 2.
/// One-dimensional instances are lifted to a plane and the witness projected
/// back. kAuto routes dimension 2 to the planar sweep.
SolveResult solve_multi(const ElectionInstance& inst, MultiMethod method = MultiMethod::kAuto,
                        int threads = 1);

/// m-approximation for any p >= 2: anchors a single-opponent subproblem at
/// every incumbent over the voters whose critical-region closures touch it,
/// and keeps the best witness. The returned count is at least OPT/m; the
/// result is exact for m == 1.
SolveResult m_approx(const ElectionInstance& inst, int threads = 1);

}  // namespace spatialvote
