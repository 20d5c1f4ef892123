#include "spatialvote/election.hpp"

#include <algorithm>
#include <numeric>

#include "spatialvote/errors.hpp"

namespace spatialvote {

void validate_instance(const ElectionInstance& inst) {
  if (inst.d < 1) throw ParseError("dimension must be at least 1");
  if (inst.p < 2) throw ParseError("distance exponent must be an integer >= 2");
  if (inst.voters.empty()) throw ParseError("instance needs at least one voter");
  if (inst.candidates.empty()) throw ParseError("instance needs at least one candidate");
  for (const auto& v : inst.voters) {
    if (static_cast<int>(v.size()) != inst.d)
      throw ParseError("voter coordinate count does not match dimension");
  }
  for (const auto& c : inst.candidates) {
    if (static_cast<int>(c.size()) != inst.d)
      throw ParseError("candidate coordinate count does not match dimension");
  }
}

std::vector<std::string> instance_warnings(const ElectionInstance& inst) {
  std::vector<std::string> out;
  for (size_t i = 0; i < inst.voters.size(); ++i) {
    for (size_t j = 0; j < inst.candidates.size(); ++j) {
      if (lp_dist_pow(inst.voters[i], inst.candidates[j], inst.p).is_zero()) {
        out.push_back("voter " + std::to_string(i) + " coincides with candidate " +
                      std::to_string(j) + " and cannot be won");
        break;
      }
    }
  }
  return out;
}

std::vector<OpenBall> critical_regions(const ElectionInstance& inst) {
  validate_instance(inst);
  std::vector<OpenBall> out;
  out.reserve(inst.n());
  for (const auto& v : inst.voters) {
    Rat best = lp_dist_pow(v, inst.candidates[0], inst.p);
    for (size_t j = 1; j < inst.candidates.size(); ++j) {
      Rat dj = lp_dist_pow(v, inst.candidates[j], inst.p);
      if (dj < best) best = dj;
    }
    out.push_back(OpenBall{v, best, inst.p});
  }
  return out;
}

std::vector<int> winning_set(const ElectionInstance& inst, const RatPoint& t) {
  auto regions = critical_regions(inst);
  std::vector<int> out;
  for (size_t i = 0; i < regions.size(); ++i) {
    if (in_open_ball(t, regions[i])) out.push_back(static_cast<int>(i));
  }
  return out;
}

long long eval_nu(const ElectionInstance& inst, const RatPoint& t) {
  return static_cast<long long>(winning_set(inst, t).size());
}

long long eval_rank(const ElectionInstance& inst, const RatPoint& t) {
  auto regions = critical_regions(inst);
  std::vector<char> won(regions.size(), 0);
  long long nu = 0;
  for (size_t i = 0; i < regions.size(); ++i) {
    if (in_open_ball(t, regions[i])) {
      won[i] = 1;
      ++nu;
    }
  }
  long long beaten = 0;
  for (const auto& cand : inst.candidates) {
    long long kept = 0;
    for (size_t i = 0; i < regions.size(); ++i) {
      if (!won[i] && in_closed_ball(cand, regions[i])) ++kept;
    }
    if (kept < nu) ++beaten;
  }
  return beaten;
}

void validate_scoring(const ElectionInstance& inst, const ScoringMatrix& q) {
  if (q.rows.size() != inst.n())
    throw ParseError("scoring matrix must have one row per voter");
  for (const auto& row : q.rows) {
    if (row.size() != inst.m())
      throw ParseError("scoring row length must equal the candidate count");
    for (size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 0) throw ParseError("scores must be non-negative");
      if (j + 1 < row.size() && row[j] < row[j + 1])
        throw ParseError("scores must be non-increasing per row");
    }
  }
}

std::vector<WeightedBall> scoring_balls(const ElectionInstance& inst, const ScoringMatrix& q) {
  validate_instance(inst);
  validate_scoring(inst, q);
  std::vector<WeightedBall> out;
  const size_t m = inst.m();
  for (size_t i = 0; i < inst.n(); ++i) {
    std::vector<std::pair<Rat, size_t>> dists;
    dists.reserve(m);
    for (size_t j = 0; j < m; ++j)
      dists.emplace_back(lp_dist_pow(inst.voters[i], inst.candidates[j], inst.p), j);
    std::sort(dists.begin(), dists.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    });
    for (size_t j = 0; j < m; ++j) {
      long w = q.rows[i][j] - (j + 1 < m ? q.rows[i][j + 1] : 0);
      if (w == 0) continue;
      out.push_back(WeightedBall{OpenBall{inst.voters[i], dists[j].first, inst.p}, w,
                                 static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return out;
}

std::pair<ElectionInstance, int> reduce_fls(const std::vector<std::vector<int>>& rows, int k) {
  if (rows.empty()) throw ParseError("reduction needs at least one row");
  const size_t width = rows[0].size();
  if (width == 0) throw ParseError("reduction rows must be nonempty");
  for (const auto& row : rows) {
    if (row.size() != width) throw ParseError("reduction rows must share one width");
    for (int e : row) {
      if (e != 1 && e != -1) throw ParseError("reduction entries must be +1 or -1");
    }
  }
  if (k < 0 || static_cast<size_t>(k) > rows.size())
    throw ParseError("threshold must lie between 0 and the row count");

  ElectionInstance inst;
  inst.d = static_cast<int>(width);
  inst.p = 2;
  inst.candidates.push_back(RatPoint(width, Rat(0)));
  for (const auto& row : rows) {
    RatPoint v;
    v.reserve(width);
    for (int e : row) v.push_back(Rat(e));
    inst.voters.push_back(std::move(v));
  }
  return {std::move(inst), k};
}

SolveResult finalize_result(const ElectionInstance& inst, RatPoint witness,
                            long long expected_nu, bool exact) {
  SolveResult res;
  res.voter_set = winning_set(inst, witness);
  res.nu = static_cast<long long>(res.voter_set.size());
  res.rank = eval_rank(inst, witness);
  res.witness = std::move(witness);
  res.exact = exact;
  if (expected_nu >= 0 && res.nu != expected_nu)
    throw InternalError("witness re-evaluation disagrees with solver count");
  return res;
}

}  // namespace spatialvote
