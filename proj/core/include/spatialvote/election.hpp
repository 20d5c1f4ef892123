#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spatialvote/geometry.hpp"

namespace spatialvote {

/// n voters and m incumbent candidates as points in Q^d, distances taken in
/// the lp norm for an integer p >= 2. A challenger placed at t wins voter i
/// iff t is strictly closer to x_i than every incumbent (ties stay with the
/// incumbents, hence open critical regions).
struct ElectionInstance {
  int d = 0;
  int p = 2;
  std::vector<RatPoint> voters;
  std::vector<RatPoint> candidates;

  size_t n() const { return voters.size(); }
  size_t m() const { return candidates.size(); }
};

/// Structural checks: d >= 1, p >= 2, nonempty voter and candidate lists,
/// consistent coordinate dimensions. Throws ParseError.
void validate_instance(const ElectionInstance& inst);

/// Non-fatal observations, e.g. a voter co-located with a candidate (legal,
/// that voter is unwinnable).
std::vector<std::string> instance_warnings(const ElectionInstance& inst);

/// Critical region of voter i: the open ball at x_i whose radius-to-the-p is
/// the minimal lp_dist_pow to any candidate. Zero radius when the voter sits
/// exactly on a candidate.
std::vector<OpenBall> critical_regions(const ElectionInstance& inst);

/// Voters strictly won by a challenger at t, ascending indices.
std::vector<int> winning_set(const ElectionInstance& inst, const RatPoint& t);

long long eval_nu(const ElectionInstance& inst, const RatPoint& t);

/// Number of incumbents that end up with strictly fewer voters than the
/// challenger at t. A remaining voter counts for every incumbent lying in
/// the closure of that voter's critical region.
long long eval_rank(const ElectionInstance& inst, const RatPoint& t);

/// Positional scoring rule: row i gives voter i's scores for 1st, 2nd, ...
/// preference. Rows must be non-increasing and non-negative.
struct ScoringMatrix {
  std::vector<std::vector<long>> rows;
};

void validate_scoring(const ElectionInstance& inst, const ScoringMatrix& q);

struct WeightedBall {
  OpenBall ball;
  long weight = 1;
  int voter = -1;
  int place = 0;  // 0-based preference position the ball's radius comes from
};

/// Difference decomposition of a scoring rule into nested open balls: voter
/// i contributes a ball at its j-th nearest candidate distance with weight
/// q_ij - q_i(j+1) (last column against 0). Distance ties between candidates
/// are broken by candidate index. The weights of one voter's balls sum to
/// that voter's top score.
std::vector<WeightedBall> scoring_balls(const ElectionInstance& inst, const ScoringMatrix& q);

/// Embeds a +-1 matrix game into a single-candidate election: one candidate
/// at the origin of Q^m', voters at the matrix rows. The threshold k carries
/// over unchanged.
std::pair<ElectionInstance, int> reduce_fls(const std::vector<std::vector<int>>& rows, int k);

struct SolveResult {
  long long nu = 0;
  long long rank = 0;
  std::vector<int> voter_set;  // ascending instance voter indices
  RatPoint witness;
  bool exact = true;
  long long regions_visited = 0;
  long long branches = 0;
};

/// Builds a SolveResult from a witness by exact re-evaluation. When
/// expected_nu >= 0 the evaluated count must match it; a mismatch means a
/// solver bug and raises InternalError.
SolveResult finalize_result(const ElectionInstance& inst, RatPoint witness,
                            long long expected_nu, bool exact);

}  // namespace spatialvote
