#include "spatialvote/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "spatialvote/errors.hpp"
#include "spatialvote/lp.hpp"
#include "spatialvote/single_opponent.hpp"

namespace spatialvote {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

RatPoint draw_point(std::mt19937_64& rng, int d, long lo, long hi) {
  RatPoint p;
  p.reserve(d);
  for (int k = 0; k < d; ++k) p.emplace_back(draw(rng, lo, hi));
  return p;
}

}  // namespace

ElectionInstance gen_instance(const GenSpec& spec) {
  if (spec.d < 1 || spec.n < 1 || spec.m < 1 || spec.p < 2 || spec.range < 1)
    throw MethodError("generator spec out of range");
  std::mt19937_64 rng(spec.seed);
  ElectionInstance inst;
  inst.d = spec.d;
  inst.p = spec.p;

  switch (spec.mode) {
    case GenMode::kUniform: {
      for (int j = 0; j < spec.m; ++j)
        inst.candidates.push_back(draw_point(rng, spec.d, -spec.range, spec.range));
      for (int i = 0; i < spec.n; ++i) {
        RatPoint v;
        for (int tries = 0; tries < 1000; ++tries) {
          v = draw_point(rng, spec.d, -spec.range, spec.range);
          bool clash = false;
          for (const auto& c : inst.candidates) clash = clash || c == v;
          if (!clash) break;
        }
        inst.voters.push_back(std::move(v));
      }
      break;
    }
    case GenMode::kBipolar: {
      inst.candidates.push_back(RatPoint(spec.d, Rat(0)));
      for (int j = 1; j < spec.m; ++j)
        inst.candidates.push_back(draw_point(rng, spec.d, -spec.range, spec.range));
      for (int i = 0; i < spec.n; ++i) {
        RatPoint v;
        for (int k = 0; k < spec.d; ++k) v.emplace_back(rng() % 2 == 0 ? 1 : -1);
        inst.voters.push_back(std::move(v));
      }
      break;
    }
    case GenMode::kClustered: {
      const int clusters = 1 + static_cast<int>(rng() % 3);
      std::vector<RatPoint> centers;
      for (int c = 0; c < clusters; ++c)
        centers.push_back(draw_point(rng, spec.d, -spec.range, spec.range));
      const long spread = std::max<long>(1, spec.range / 8);
      for (int i = 0; i < spec.n; ++i) {
        const RatPoint& c = centers[rng() % clusters];
        RatPoint v;
        for (int k = 0; k < spec.d; ++k)
          v.push_back(c[k] + Rat(draw(rng, -spread, spread)));
        inst.voters.push_back(std::move(v));
      }
      for (int j = 0; j < spec.m; ++j)
        inst.candidates.push_back(draw_point(rng, spec.d, -spec.range, spec.range));
      break;
    }
  }
  validate_instance(inst);
  return inst;
}

SolveResult brute_single(const ElectionInstance& inst) {
  validate_instance(inst);
  if (inst.m() != 1) throw MethodError("brute oracle needs a single incumbent");
  if (inst.n() > 20) throw MethodError("brute oracle is capped at 20 voters");
  const RatPoint& t = inst.candidates[0];

  std::vector<RatVec> normals;
  std::vector<RatVec> offsets;
  for (const auto& x : inst.voters) {
    RatVec z = sub(x, t);
    if (is_zero(z)) continue;
    normals.push_back(tangent_normal(z, inst.p));
    offsets.push_back(std::move(z));
  }
  const size_t na = normals.size();
  long long tried = 0;
  if (na == 0) {
    SolveResult res = finalize_result(inst, t, 0, true);
    return res;
  }

  for (size_t k = na; k + 1 > 0; --k) {
    std::vector<char> sel(na, 0);
    std::fill(sel.begin(), sel.begin() + k, 1);
    do {
      std::vector<RatVec> rows;
      rows.reserve(na);
      for (size_t i = 0; i < na; ++i)
        rows.push_back(sel[i] ? normals[i] : negated(normals[i]));
      ++tried;
      auto y = strict_homogeneous_lp(rows, inst.d);
      if (!y) continue;
      std::vector<RatVec> won;
      for (size_t i = 0; i < na; ++i)
        if (sel[i]) won.push_back(offsets[i]);
      RatVec step = scale_into_balls(won, inst.p, *y);
      SolveResult res = finalize_result(inst, add(t, step), static_cast<long long>(k), true);
      res.regions_visited = tried;
      return res;
    } while (std::prev_permutation(sel.begin(), sel.end()));
  }
  throw InternalError("brute oracle found no feasible sign pattern");
}

namespace {

// Smallest integer at or above sqrt(r); r must be nonnegative.
long ceil_sqrt_bound(const Rat& r) {
  mpz_class num = r.num(), den = r.den();
  mpz_class q = num / den + 1;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
  root += 1;
  if (!root.fits_slong_p()) throw Error("sampling box out of range");
  return root.get_si();
}

}  // namespace

SampleResult sample_lower_bound(const std::vector<WeightedBall>& balls, int dim,
                                long probes, unsigned long long seed) {
  SampleResult out;
  if (balls.empty()) return out;
  auto weight = [&](const RatPoint& pt) {
    long long w = 0;
    for (const auto& wb : balls)
      if (in_open_ball(pt, wb.ball)) w += wb.weight;
    return w;
  };
  out.best_weight = -1;
  auto consider = [&](const RatPoint& pt) {
    long long w = weight(pt);
    if (w > out.best_weight) {
      out.best_weight = w;
      out.best_point = pt;
    }
  };

  for (const auto& wb : balls) consider(wb.ball.center);

  // Equal-power point of each small Euclidean subset, solved inside the
  // subset's affine hull: x = c0 + sum_l s_l (c_l - c0) with x on every
  // radical plane against c0. Covers the radical foot of a pair and the
  // power center of a triple or quadruple, where deep regions bottom out.
  auto equal_power_point = [&](const std::vector<size_t>& idx) {
    const size_t k = idx.size() - 1;
    const RatPoint& c0 = balls[idx[0]].ball.center;
    const Rat& r0 = balls[idx[0]].ball.radius_pow;
    std::vector<RatVec> g;
    std::vector<Rat> rhs;
    for (size_t l = 1; l < idx.size(); ++l) {
      const OpenBall& b = balls[idx[l]].ball;
      g.push_back(sub(b.center, c0));
      rhs.push_back(((norm2_pow(b.center) - b.radius_pow) - (norm2_pow(c0) - r0)) / Rat(2) -
                    dot(g.back(), c0));
    }
    // Gram system (g_j . g_l) s = rhs.
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k + 1));
    for (size_t r = 0; r < k; ++r) {
      for (size_t c = 0; c < k; ++c) m[r][c] = dot(g[r], g[c]);
      m[r][k] = rhs[r];
    }
    for (size_t col = 0; col < k; ++col) {
      size_t piv = col;
      while (piv < k && m[piv][col].is_zero()) ++piv;
      if (piv == k) return;  // degenerate subset
      std::swap(m[piv], m[col]);
      for (size_t r = 0; r < k; ++r) {
        if (r == col || m[r][col].is_zero()) continue;
        Rat f = m[r][col] / m[col][col];
        for (size_t c = col; c <= k; ++c) m[r][c] = m[r][c] - f * m[col][c];
      }
    }
    RatPoint pt = c0;
    for (size_t l = 0; l < k; ++l) pt = add(pt, scaled(g[l], m[l][k] / m[l][l]));
    consider(pt);
  };
  auto next_combination = [](std::vector<size_t>& idx, size_t limit) {
    const size_t k = idx.size();
    for (size_t l = k; l-- > 0;) {
      if (idx[l] + (k - l) < limit) {
        ++idx[l];
        for (size_t r = l + 1; r < k; ++r) idx[r] = idx[r - 1] + 1;
        return true;
      }
    }
    return false;
  };
  bool euclidean = true;
  for (const auto& wb : balls) euclidean = euclidean && wb.ball.norm_exp == 2;
  const size_t nb = balls.size();
  const size_t max_subset = std::min<size_t>(static_cast<size_t>(dim) + 1, 4);
  if (euclidean && nb >= 2) {
    for (size_t take = 2; take <= std::min(max_subset, nb); ++take) {
      std::vector<size_t> idx(take);
      std::iota(idx.begin(), idx.end(), 0);
      long long budget = 20000;
      do {
        equal_power_point(idx);
      } while (--budget > 0 && next_combination(idx, nb));
    }
  }

  // Bounding box wide enough to contain every ball.
  long pad = 1;
  for (const auto& wb : balls) {
    if (wb.ball.radius_pow.sign() > 0) {
      Rat pow = wb.ball.radius_pow;
      if (wb.ball.norm_exp != 2) {
        // ||.||_p ball radius r = pow^(1/p) <= max(1, pow); crude but safe.
        pad = std::max(pad, 1 + ceil_sqrt_bound(pow * pow));
      } else {
        pad = std::max(pad, ceil_sqrt_bound(pow));
      }
    }
  }
  std::vector<long> lo(dim), hi(dim);
  for (int k = 0; k < dim; ++k) {
    Rat mn = balls[0].ball.center[k], mx = balls[0].ball.center[k];
    for (const auto& wb : balls) {
      mn = std::min(mn, wb.ball.center[k]);
      mx = std::max(mx, wb.ball.center[k]);
    }
    mpz_class fl = mn.num() / mn.den() - 1, ce = mx.num() / mx.den() + 2;
    if (!fl.fits_slong_p() || !ce.fits_slong_p()) throw Error("sampling box out of range");
    lo[k] = fl.get_si() - pad;
    hi[k] = ce.get_si() + pad;
  }

  std::mt19937_64 rng(seed);
  const long box_probes = probes / 2;
  for (long t = 0; t < box_probes; ++t) {
    RatPoint pt;
    pt.reserve(dim);
    for (int k = 0; k < dim; ++k) {
      unsigned e = rng() % 17;
      long den = 1L << e;
      long span = (hi[k] - lo[k]) * den;
      long num = static_cast<long>(rng() % static_cast<unsigned long long>(span + 1));
      pt.push_back(Rat(lo[k]) + Rat(num, den));
    }
    consider(pt);
  }

  // Any nonempty ball intersection meets the convex hull of its centers
  // (projecting onto the hull cannot move a point farther from any center),
  // so hull combinations probe far denser than the box.
  for (long t = box_probes; t < probes; ++t) {
    const size_t take = 1 + rng() % std::min<size_t>(balls.size(), 4);
    RatPoint pt(dim, Rat(0));
    long total = 0;
    for (size_t l = 0; l < take; ++l) {
      const RatPoint& c = balls[rng() % balls.size()].ball.center;
      long w = 1 + static_cast<long>(rng() % 16);
      total += w;
      pt = add(pt, scaled(c, Rat(w)));
    }
    pt = scaled(pt, Rat(1, total));
    consider(pt);
  }
  return out;
}

}  // namespace spatialvote
