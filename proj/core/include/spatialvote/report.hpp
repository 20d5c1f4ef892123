#pragma once

#include <string>
#include <vector>

#include "spatialvote/election.hpp"

namespace spatialvote {

/// Everything a solve run emits. Witnesses and coordinates are serialized as
/// exact "num/den" strings; wall time is the only floating point field.
struct RunReport {
  std::string method;
  std::string objective = "nu";
  int d = 0;
  int p = 0;
  long long n = 0;
  long long m = 0;
  SolveResult result;
  double wall_ms = 0.0;
  int threads = 1;
  std::vector<std::string> warnings;
};

std::string report_to_json(const RunReport& report);

/// Exact evaluation of one point: vote count, rank, and the voter set won.
std::string eval_to_json(const ElectionInstance& inst, const RatPoint& t);

}  // namespace spatialvote
