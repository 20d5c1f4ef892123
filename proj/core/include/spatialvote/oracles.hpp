#pragma once

#include <vector>

#include "spatialvote/election.hpp"

namespace spatialvote {

enum class GenMode { kUniform, kBipolar, kClustered };

struct GenSpec {
  int d = 2;
  int n = 8;
  int m = 1;
  int p = 2;
  long range = 16;  // coordinates drawn from [-range, range]
  GenMode mode = GenMode::kUniform;
  unsigned long long seed = 1;
};

/// Deterministic instance generator. The draw is a plain modulo reduction of
/// mt19937_64 output, so identical seeds give identical instances on every
/// platform.
ElectionInstance gen_instance(const GenSpec& spec);

/// Reference solver for one incumbent: tries every sign pattern over the
/// tangent hyperplanes, largest positive set first, and returns the first
/// feasible one. Exponential; guarded to n <= 20.
SolveResult brute_single(const ElectionInstance& inst);

struct SampleResult {
  long long best_weight = 0;
  RatPoint best_point;
};

/// Best weight seen over a deterministic probe set: every ball center, the
/// radical-axis foot of every distinct-center Euclidean pair, and seeded
/// random rationals with power-of-two denominators inside the bounding box.
/// A lower bound on the true optimum by construction.
SampleResult sample_lower_bound(const std::vector<WeightedBall>& balls, int dim,
                                long probes = 100000, unsigned long long seed = 1);

}  // namespace spatialvote
