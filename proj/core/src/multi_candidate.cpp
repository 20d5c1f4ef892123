#include "spatialvote/multi_candidate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <thread>
#include <utility>

#include "spatialvote/errors.hpp"
#include "spatialvote/single_opponent.hpp"

namespace spatialvote {

namespace {

// Nonempty balls of an arrangement, with their original indices.
struct ActiveBalls {
  std::vector<RatPoint> centers;
  std::vector<Rat> radius_pow;
  std::vector<long> weights;
  std::vector<int> orig;
};

ActiveBalls collect_active(const BallArrangement& arr) {
  if (arr.dim < 2) throw Error("ball arrangement needs dimension >= 2");
  ActiveBalls ab;
  // Coincident balls are folded into one entry. Level-0 input arrives
  // deduplicated, but projecting a symmetric pair onto its radical plane
  // recreates duplicates, and the arc walk needs the balls distinct.
  std::map<std::pair<RatPoint, Rat>, size_t> seen;
  for (size_t i = 0; i < arr.balls.size(); ++i) {
    const OpenBall& b = arr.balls[i];
    if (b.norm_exp != 2) throw Error("ball arrangement is Euclidean only");
    if (static_cast<int>(b.center.size()) != arr.dim)
      throw Error("ball center dimension mismatch");
    if (arr.weights[i] <= 0) throw Error("ball weights must be positive");
    if (b.radius_pow.sign() <= 0) continue;
    auto key = std::make_pair(b.center, b.radius_pow);
    if (auto it = seen.find(key); it != seen.end()) {
      ab.weights[it->second] += arr.weights[i];
      continue;
    }
    seen.emplace(std::move(key), ab.centers.size());
    ab.centers.push_back(b.center);
    ab.radius_pow.push_back(b.radius_pow);
    ab.weights.push_back(arr.weights[i]);
    ab.orig.push_back(static_cast<int>(i));
  }
  for (const auto& h : arr.subspace) {
    for (const auto& c : ab.centers) {
      if (dot(h.coeffs, c) != h.offset)
        throw Error("ball center off the recursion subspace");
    }
  }
  return ab;
}

// Basis of the common kernel of the subspace normals; also checks that the
// normals are independent.
std::vector<RatVec> subspace_basis(const BallArrangement& arr) {
  const size_t d = static_cast<size_t>(arr.dim);
  const size_t k = arr.subspace.size();
  std::vector<RatVec> m;
  for (const auto& h : arr.subspace) {
    if (h.coeffs.size() != d) throw Error("subspace normal dimension mismatch");
    m.push_back(h.coeffs);
  }
  std::vector<size_t> pivot_cols;
  size_t rank = 0;
  for (size_t col = 0; col < d && rank < m.size(); ++col) {
    size_t src = rank;
    while (src < m.size() && m[src][col].is_zero()) ++src;
    if (src == m.size()) continue;
    std::swap(m[src], m[rank]);
    Rat inv = Rat(1) / m[rank][col];
    for (auto& v : m[rank]) v = v * inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      Rat f = m[i][col];
      for (size_t j = 0; j < d; ++j) m[i][j] = m[i][j] - f * m[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  if (rank != k) throw Error("subspace normals must be linearly independent");

  std::vector<char> is_pivot(d, 0);
  for (size_t c : pivot_cols) is_pivot[c] = 1;
  std::vector<RatVec> basis;
  for (size_t f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(d, Rat(0));
    v[f] = Rat(1);
    for (size_t r = 0; r < rank; ++r) v[pivot_cols[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

long long weight_at(const ActiveBalls& ab, const RatPoint& pt) {
  long long w = 0;
  for (size_t j = 0; j < ab.centers.size(); ++j) {
    if (lp_dist_pow(pt, ab.centers[j], 2) < ab.radius_pow[j]) w += ab.weights[j];
  }
  return w;
}

std::vector<int> members_at(const BallArrangement& arr, const RatPoint& pt) {
  std::vector<int> out;
  for (size_t j = 0; j < arr.balls.size(); ++j) {
    if (in_open_ball(pt, arr.balls[j])) out.push_back(static_cast<int>(j));
  }
  return out;
}

}  // namespace

BallArrangement arrangement_from_weighted(const std::vector<WeightedBall>& balls, int dim) {
  BallArrangement arr;
  arr.dim = dim;
  std::map<std::pair<RatPoint, Rat>, long> merged;
  for (const auto& wb : balls) {
    if (wb.ball.norm_exp != 2) throw MethodError("ball solvers require p = 2");
    if (static_cast<int>(wb.ball.center.size()) != dim)
      throw Error("ball dimension mismatch");
    if (wb.weight <= 0) throw Error("ball weights must be positive");
    merged[{wb.ball.center, wb.ball.radius_pow}] += wb.weight;
  }
  for (const auto& [key, w] : merged) {
    arr.balls.push_back(OpenBall{key.first, key.second, 2});
    arr.weights.push_back(w);
  }
  return arr;
}

BallArrangement arrangement_from_instance(const ElectionInstance& inst) {
  validate_instance(inst);
  if (inst.p != 2) throw MethodError("ball solvers require p = 2");
  std::vector<WeightedBall> wb;
  auto regions = critical_regions(inst);
  for (size_t i = 0; i < regions.size(); ++i)
    wb.push_back(WeightedBall{regions[i], 1, static_cast<int>(i), 0});
  return arrangement_from_weighted(wb, inst.d);
}

BallRelation nesting_predicate(const OpenBall& b1, const OpenBall& b2) {
  if (b1.norm_exp != 2 || b2.norm_exp != 2)
    throw Error("nesting_predicate is Euclidean only");
  if (b1.radius_pow.sign() <= 0 || b2.radius_pow.sign() <= 0)
    throw Error("nesting_predicate needs positive radii");
  Rat d2 = lp_dist_pow(b1.center, b2.center, 2);
  const Rat& R1 = b1.radius_pow;
  const Rat& R2 = b2.radius_pow;
  if (d2.is_zero()) {
    if (R1 == R2) return BallRelation::kEqual;
    return R1 < R2 ? BallRelation::kB1InsideB2 : BallRelation::kB2InsideB1;
  }
  Rat e = d2 - R1 - R2;
  // d >= r1 + r2, i.e. e >= 2*sqrt(R1 R2): open balls share nothing.
  if (QE2(e, Rat(-2), R1 * R2).sign() >= 0) return BallRelation::kDisjoint;
  // d <= |r1 - r2|, i.e. e <= -2*sqrt(R1 R2): the smaller ball is inside.
  if (QE2(e, Rat(2), R1 * R2).sign() <= 0)
    return R1 < R2 ? BallRelation::kB1InsideB2 : BallRelation::kB2InsideB1;
  return BallRelation::kProperIntersect;
}

std::optional<Hyperplane> radical_hyperplane(const OpenBall& b1, const OpenBall& b2) {
  if (b1.norm_exp != 2 || b2.norm_exp != 2)
    throw Error("radical_hyperplane is Euclidean only");
  if (b1.center.size() != b2.center.size())
    throw Error("radical_hyperplane dimension mismatch");
  Rat d2 = lp_dist_pow(b1.center, b2.center, 2);
  if (d2.is_zero()) {
    if (b1.radius_pow == b2.radius_pow)
      throw Error("radical_hyperplane: concentric equal balls");
    return std::nullopt;
  }
  // The boundary spheres meet iff |d^2 - R1 - R2| <= 2 sqrt(R1 R2).
  Rat e = d2 - b1.radius_pow - b2.radius_pow;
  if (QE2(e * e - Rat(4) * b1.radius_pow * b2.radius_pow).sign() > 0) return std::nullopt;
  Hyperplane h;
  h.coeffs = scaled(sub(b2.center, b1.center), Rat(2));
  h.offset = (norm2_pow(b2.center) - b2.radius_pow) - (norm2_pow(b1.center) - b1.radius_pow);
  return h;
}

namespace {

// Plane coordinates of a crossing point relative to the host center, as
// elements of Q(sqrt(T)).
struct OrientedPoint {
  QE2 alpha, beta;
  size_t index;  // into the arc point list
};

int angular_rank(const QE2& alpha, const QE2& beta) {
  int bs = beta.sign();
  if (bs > 0) return 1;
  if (bs < 0) return 3;
  return alpha.sign() > 0 ? 0 : 2;
}

// Counterclockwise-from-east order of directions; cross product signs over
// the biquadratic extension when two radicands meet.
bool angular_less(const OrientedPoint& p, const OrientedPoint& q) {
  int rp = angular_rank(p.alpha, p.beta);
  int rq = angular_rank(q.alpha, q.beta);
  if (rp != rq) return rp < rq;
  if (rp == 0 || rp == 2) return false;  // seams hold a single direction
  QuadExtNum cross = QuadExtNum::product(p.alpha, q.beta);
  cross.sub(QuadExtNum::product(q.alpha, p.beta));
  return cross.sign() > 0;
}

bool angular_equal(const OrientedPoint& p, const OrientedPoint& q) {
  return !angular_less(p, q) && !angular_less(q, p);
}

}  // namespace

SolveResult modified_balls1(const BallArrangement& arr) {
  ActiveBalls ab = collect_active(arr);
  std::vector<RatVec> basis = subspace_basis(arr);
  if (basis.size() != 2) throw MethodError("modified_balls1: effective dimension must be 2");
  const RatVec& b1 = basis[0];
  const RatVec& b2 = basis[1];

  SolveResult res;
  res.nu = 0;
  if (ab.centers.empty()) return res;
  const size_t n = ab.centers.size();

  const Rat G11 = dot(b1, b1), G12 = dot(b1, b2), G22 = dot(b2, b2);
  const Rat det = G11 * G22 - G12 * G12;

  long long best = -1;
  RatPoint best_center;
  bool best_is_arc = false;
  ArcPoint best_from, best_to;
  long long samples = 0;

  for (size_t i = 0; i < n; ++i) {
    ++samples;
    long long w = weight_at(ab, ab.centers[i]);
    if (w > best) {
      best = w;
      best_center = ab.centers[i];
      best_is_arc = false;
    }
  }

  for (size_t i = 0; i < n; ++i) {
    const OpenBall host{ab.centers[i], ab.radius_pow[i], 2};
    std::vector<ArcPoint> pts;
    std::vector<OrientedPoint> order;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const OpenBall other{ab.centers[j], ab.radius_pow[j], 2};
      if (nesting_predicate(host, other) != BallRelation::kProperIntersect) continue;
      RatVec g = sub(ab.centers[j], ab.centers[i]);
      Rat d2 = dot(g, g);
      Rat lam = (d2 + ab.radius_pow[i] - ab.radius_pow[j]) / (Rat(2) * d2);
      RatPoint anchor = add(ab.centers[i], scaled(g, lam));
      RatVec u = sub(scaled(b2, dot(b1, g)), scaled(b1, dot(b2, g)));
      Rat uu = dot(u, u);
      Rat disc = (ab.radius_pow[i] - lam * lam * d2) / uu;
      if (disc.sign() <= 0)
        throw InternalError("modified_balls1: crossing discriminant not positive");
      // Plane coordinates of anchor-center and of u, for the angular order.
      Rat pg1 = dot(b1, g), pg2 = dot(b2, g);
      Rat pu1 = dot(b1, u), pu2 = dot(b2, u);
      Rat ar = lam * (G22 * pg1 - G12 * pg2) / det;
      Rat arad = (G22 * pu1 - G12 * pu2) / det;
      Rat br = lam * (G11 * pg2 - G12 * pg1) / det;
      Rat brad = (G11 * pu2 - G12 * pu1) / det;
      for (int sgn : {1, -1}) {
        order.push_back(OrientedPoint{QE2(ar, Rat(sgn) * arad, disc),
                                      QE2(br, Rat(sgn) * brad, disc), pts.size()});
        pts.push_back(ArcPoint{anchor, u, QE2(Rat(0), Rat(sgn), disc), static_cast<int>(j)});
      }
    }
    if (pts.empty()) continue;

    std::sort(order.begin(), order.end(), angular_less);
    std::vector<std::pair<size_t, size_t>> groups;  // [begin, end) runs of one direction
    for (size_t b = 0; b < order.size();) {
      size_t e = b + 1;
      while (e < order.size() && angular_equal(order[b], order[e])) ++e;
      groups.emplace_back(b, e);
      b = e;
    }

    // Probe point on the host circle, off every crossing direction and every
    // other boundary; memberships measured here seed the walk.
    std::vector<char> member(n, 0);
    long long cnt = 0;
    long t_num = 0;
    bool seeded = false;
    const long max_tries = static_cast<long>(4 + pts.size() + 2 * n);
    for (long trial = 0; trial < max_tries && !seeded; ++trial) {
      t_num = trial == 0 ? 0 : (trial % 2 == 1 ? (trial + 1) / 2 : -(trial / 2));
      RatVec w = add(scaled(b1, Rat(t_num)), b2);  // plane direction (t, 1)
      Rat grad = ab.radius_pow[i] / dot(w, w);
      bool clean = true;
      for (const auto& op : order) {
        if (angular_rank(op.alpha, op.beta) != 1) continue;
        if ((op.beta.scaled(Rat(t_num)) - op.alpha).sign() == 0) {
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      std::vector<char> mem(n, 0);
      long long c = 0;
      for (size_t j = 0; j < n && clean; ++j) {
        if (j == i) continue;
        RatVec cc = sub(ab.centers[i], ab.centers[j]);
        QE2 diff(dot(cc, cc) + grad * dot(w, w) - ab.radius_pow[j],
                 Rat(2) * dot(cc, w), grad);
        int s = diff.sign();
        if (s == 0) {
          clean = false;
          break;
        }
        if (s < 0) {
          mem[j] = 1;
          c += ab.weights[j];
        }
      }
      if (!clean) continue;
      member = std::move(mem);
      cnt = c;
      seeded = true;
    }
    if (!seeded) throw InternalError("modified_balls1: no clean probe direction");

    // First group past the probe direction (t, 1), which sits in the upper
    // half-plane.
    OrientedPoint probe{QE2(Rat(t_num)), QE2(Rat(1)), 0};
    size_t start = 0;
    while (start < groups.size() && !angular_less(probe, order[groups[start].first])) ++start;
    start %= groups.size();

    const std::vector<char> initial = member;
    const long long cnt0 = cnt;
    for (size_t k = 0; k < groups.size(); ++k) {
      const auto& [gb, ge] = groups[(start + k) % groups.size()];
      for (size_t q = gb; q < ge; ++q) {
        size_t j = static_cast<size_t>(pts[order[q].index].partner);
        member[j] = !member[j];
        cnt += member[j] ? ab.weights[j] : -ab.weights[j];
      }
      ++samples;
      long long claim = ab.weights[i] + cnt;
      if (claim > best) {
        best = claim;
        best_is_arc = true;
        best_from = pts[order[gb].index];
        const auto& [nb, ne] = groups[(start + k + 1) % groups.size()];
        best_to = pts[order[nb].index];
        (void)ne;
      }
    }
    if (member != initial || cnt != cnt0)
      throw InternalError("modified_balls1: walk did not close");
  }

  RatPoint witness;
  if (!best_is_arc) {
    witness = best_center;
    if (weight_at(ab, witness) != best)
      throw InternalError("modified_balls1: center weight mismatch");
  } else {
    // Rationalize a point near the midpoint of the chord between the arc's
    // endpoints; the chord interior lies in the host ball and in every arc
    // member, so enough precision always verifies.
    bool done = false;
    for (unsigned bits = 32; bits <= 512 && !done; bits += 16) {
      auto approx_pt = [&](const ArcPoint& p) {
        Rat coeff = p.scale.r();
        if (!p.scale.is_rational()) {
          auto [lo, hi] = sqrt_bracket(p.scale.D(), bits);
          coeff = coeff + p.scale.s() * ((lo + hi) / Rat(2));
        }
        return add(p.anchor, scaled(p.direction, coeff));
      };
      RatPoint a = approx_pt(best_from);
      RatPoint b = approx_pt(best_to);
      RatPoint m(a.size());
      for (size_t k = 0; k < a.size(); ++k) m[k] = (a[k] + b[k]) / Rat(2);
      long long ver = weight_at(ab, m);
      if (ver >= best) {
        if (ver != best) throw InternalError("modified_balls1: witness exceeds optimum");
        witness = std::move(m);
        done = true;
      }
    }
    if (!done) throw InternalError("modified_balls1: chord witness did not verify");
  }

  res.nu = best;
  res.witness = witness;
  res.regions_visited = samples;
  for (size_t j = 0; j < n; ++j) {
    if (lp_dist_pow(witness, ab.centers[j], 2) < ab.radius_pow[j])
      res.voter_set.push_back(ab.orig[j]);
  }
  return res;
}

namespace {

struct PairTask {
  size_t i, j;
  Hyperplane h;
  long long ub;
};

BallArrangement project_onto(const BallArrangement& arr, const ActiveBalls& ab,
                             const Hyperplane& h) {
  BallArrangement sub;
  sub.dim = arr.dim;
  sub.subspace = arr.subspace;
  sub.subspace.push_back(h);
  const Rat aa = dot(h.coeffs, h.coeffs);
  for (size_t k = 0; k < ab.centers.size(); ++k) {
    Rat lam = (h.offset - dot(h.coeffs, ab.centers[k])) / aa;
    Rat r2 = ab.radius_pow[k] - lam * lam * aa;
    if (r2.sign() <= 0) continue;
    sub.balls.push_back(OpenBall{add(ab.centers[k], scaled(h.coeffs, lam)), r2, 2});
    sub.weights.push_back(ab.weights[k]);
  }
  return sub;
}

SolveResult balls3_recurse(const BallArrangement& arr, int threads) {
  ActiveBalls ab = collect_active(arr);
  size_t eff = subspace_basis(arr).size();
  if (eff < 2) throw Error("modified_balls3: effective dimension below 2");
  if (eff == 2) return modified_balls1(arr);

  SolveResult res;
  res.nu = 0;
  if (ab.centers.empty()) return res;
  const size_t n = ab.centers.size();

  // Nesting scan: weight of all balls containing ball i entirely, witnessed
  // by its center. Covers optima whose region is a full ball.
  long long best_scan = -1;
  size_t scan_idx = 0;
  for (size_t i = 0; i < n; ++i) {
    const OpenBall bi{ab.centers[i], ab.radius_pow[i], 2};
    long long w = ab.weights[i];
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      BallRelation rel = nesting_predicate(bi, OpenBall{ab.centers[j], ab.radius_pow[j], 2});
      if (rel == BallRelation::kB1InsideB2 || rel == BallRelation::kEqual) w += ab.weights[j];
    }
    if (w > best_scan) {
      best_scan = w;
      scan_idx = i;
    }
  }

  std::vector<PairTask> tasks;
  for (size_t i = 0; i < n; ++i) {
    const OpenBall bi{ab.centers[i], ab.radius_pow[i], 2};
    for (size_t j = i + 1; j < n; ++j) {
      const OpenBall bj{ab.centers[j], ab.radius_pow[j], 2};
      if (nesting_predicate(bi, bj) != BallRelation::kProperIntersect) continue;
      auto h = radical_hyperplane(bi, bj);
      if (!h) throw InternalError("modified_balls3: crossing pair without radical plane");
      long long ub = 0;
      const Rat aa = dot(h->coeffs, h->coeffs);
      for (size_t k = 0; k < n; ++k) {
        Rat lam = (h->offset - dot(h->coeffs, ab.centers[k])) / aa;
        if (ab.radius_pow[k] - lam * lam * aa > Rat(0)) ub += ab.weights[k];
      }
      tasks.push_back(PairTask{i, j, std::move(*h), ub});
    }
  }

  long long branches = 0;
  std::vector<std::optional<SolveResult>> sub_results(tasks.size());
  if (threads > 1 && tasks.size() > 1) {
    // Workers evaluate every branch the scan bound cannot prune; selection
    // happens afterwards in pair order, so the outcome matches a serial run.
    std::atomic<size_t> next{0};
    std::atomic<long long> done_branches{0};
    auto worker = [&]() {
      for (;;) {
        size_t t = next.fetch_add(1);
        if (t >= tasks.size()) return;
        if (tasks[t].ub <= best_scan) continue;
        BallArrangement sub = project_onto(arr, ab, tasks[t].h);
        SolveResult r = balls3_recurse(sub, 1);
        done_branches.fetch_add(1 + r.branches);
        sub_results[t] = std::move(r);
      }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(threads, static_cast<int>(tasks.size()));
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    branches = done_branches.load();
  }

  long long running = best_scan;
  bool from_pair = false;
  res.nu = best_scan;
  res.witness = ab.centers[scan_idx];
  for (size_t t = 0; t < tasks.size(); ++t) {
    if (tasks[t].ub <= running) continue;
    if (!sub_results[t]) {
      BallArrangement sub = project_onto(arr, ab, tasks[t].h);
      SolveResult r = balls3_recurse(sub, 1);
      branches += 1 + r.branches;
      sub_results[t] = std::move(r);
    }
    SolveResult& r = *sub_results[t];
    if (r.nu > running || (r.nu == running && !from_pair)) {
      running = r.nu;
      from_pair = true;
      res.nu = r.nu;
      res.witness = r.witness;
    }
  }
  res.branches = branches;
  res.voter_set.clear();
  if (!res.witness.empty()) {
    for (size_t j = 0; j < n; ++j) {
      if (lp_dist_pow(res.witness, ab.centers[j], 2) < ab.radius_pow[j])
        res.voter_set.push_back(ab.orig[j]);
    }
  }
  return res;
}

}  // namespace

SolveResult modified_balls3(const BallArrangement& arr, int threads) {
  SolveResult res = balls3_recurse(arr, threads);
  if (!res.witness.empty()) {
    ActiveBalls ab = collect_active(arr);
    if (weight_at(ab, res.witness) != res.nu)
      throw InternalError("modified_balls3: witness weight disagrees with claim");
    res.voter_set = members_at(arr, res.witness);
  }
  return res;
}

SolveResult solve_weighted_balls(const std::vector<WeightedBall>& balls, int dim,
                                 MultiMethod method, int threads) {
  const bool lift = dim == 1;
  std::vector<WeightedBall> work = balls;
  if (lift) {
    for (auto& wb : work) wb.ball.center.push_back(Rat(0));
  }
  const int adim = lift ? 2 : dim;
  BallArrangement arr = arrangement_from_weighted(work, adim);
  if (method == MultiMethod::kBalls1 && adim != 2)
    throw MethodError("balls1 needs dimension 2");
  const bool planar = method == MultiMethod::kBalls1 || (method == MultiMethod::kAuto && adim == 2);
  SolveResult res = planar ? modified_balls1(arr) : modified_balls3(arr, threads);
  if (lift && !res.witness.empty()) res.witness.resize(1);
  return res;
}

SolveResult solve_multi(const ElectionInstance& inst, MultiMethod method, int threads) {
  validate_instance(inst);
  if (inst.p != 2) throw MethodError("ball solvers require p = 2");
  auto regions = critical_regions(inst);
  std::vector<WeightedBall> wb;
  for (size_t i = 0; i < regions.size(); ++i)
    wb.push_back(WeightedBall{regions[i], 1, static_cast<int>(i), 0});
  SolveResult br = solve_weighted_balls(wb, inst.d, method, threads);
  RatPoint witness = br.witness.empty() ? inst.candidates[0] : br.witness;
  SolveResult res = finalize_result(inst, std::move(witness), br.nu, true);
  res.regions_visited = br.regions_visited;
  res.branches = br.branches;
  return res;
}

SolveResult m_approx(const ElectionInstance& inst, int threads) {
  validate_instance(inst);
  auto regions = critical_regions(inst);
  long long best_claim = -1;
  RatPoint best_witness;
  long long visited = 0, branches = 0;

  for (size_t j = 0; j < inst.m(); ++j) {
    const RatPoint& t = inst.candidates[j];
    std::vector<int> anchored;
    for (size_t i = 0; i < inst.n(); ++i) {
      if (regions[i].radius_pow.sign() > 0 &&
          lp_dist_pow(inst.voters[i], t, inst.p) == regions[i].radius_pow)
        anchored.push_back(static_cast<int>(i));
    }
    if (anchored.empty()) continue;

    long long claim;
    RatPoint witness;
    if (inst.p == 2) {
      std::vector<WeightedBall> wb;
      for (int i : anchored) wb.push_back(WeightedBall{regions[i], 1, i, 0});
      SolveResult r = solve_weighted_balls(wb, inst.d, MultiMethod::kAuto, threads);
      claim = r.nu;
      witness = std::move(r.witness);
      visited += r.regions_visited;
      branches += r.branches;
      if (witness.empty()) continue;
    } else {
      CentralArrangement arr;
      arr.dim = inst.d;
      for (int i : anchored) {
        arr.normals.push_back(tangent_normal(sub(inst.voters[i], t), inst.p));
        arr.voters.push_back(i);
      }
      EnumerateResult er = inst.d == 2 ? radial_sweep_2d(arr) : enumerate_regions(arr);
      std::vector<RatVec> offsets;
      for (size_t k = 0; k < arr.normals.size(); ++k) {
        if (er.best_signs[k] > 0) offsets.push_back(sub(inst.voters[arr.voters[k]], t));
      }
      RatVec step = scale_into_balls(offsets, inst.p, er.best_direction);
      witness = add(t, step);
      claim = er.best_positive;
      visited += er.regions_visited;
    }
    if (claim > best_claim) {
      best_claim = claim;
      best_witness = std::move(witness);
    }
  }

  if (best_claim < 0) {
    best_claim = 0;
    best_witness = inst.candidates[0];
  }
  SolveResult res = finalize_result(inst, std::move(best_witness), -1, false);
  if (res.nu < best_claim) throw InternalError("m_approx: witness lost claimed voters");
  res.regions_visited = visited;
  res.branches = branches;
  return res;
}

}  // namespace spatialvote
