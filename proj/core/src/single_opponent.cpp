#include "spatialvote/single_opponent.hpp"

#include <algorithm>
#include <deque>
#include <iostream>
#include <map>
#include <utility>

#include "spatialvote/errors.hpp"
#include "spatialvote/lp.hpp"

namespace spatialvote {

RatVec tangent_normal(const RatVec& offset, int p) {
  if (p < 2) throw Error("tangent_normal: exponent must be >= 2");
  if (is_zero(offset)) throw Error("tangent_normal: offset must be nonzero");
  RatVec out;
  out.reserve(offset.size());
  for (const auto& z : offset) out.push_back(signed_pow(z, p - 1));
  return out;
}

CentralArrangement single_arrangement(const ElectionInstance& inst) {
  validate_instance(inst);
  if (inst.m() != 1) throw MethodError("single-opponent arrangement needs exactly one incumbent");
  CentralArrangement arr;
  arr.dim = inst.d;
  const RatPoint& anchor = inst.candidates[0];
  for (size_t i = 0; i < inst.n(); ++i) {
    RatVec off = sub(inst.voters[i], anchor);
    if (is_zero(off)) continue;  // unwinnable, no hyperplane
    arr.normals.push_back(tangent_normal(off, inst.p));
    arr.voters.push_back(static_cast<int>(i));
  }
  return arr;
}

RatVec generic_direction(const CentralArrangement& arr) {
  const size_t d = static_cast<size_t>(arr.dim);
  auto clear = [&](const RatVec& dir) {
    for (const auto& nrm : arr.normals) {
      if (dot(nrm, dir).is_zero()) return false;
    }
    return true;
  };
  for (size_t k = 0; k < d; ++k) {
    RatVec dir(d, Rat(0));
    dir[k] = Rat(1);
    if (clear(dir)) return dir;
  }
  // Moment curve: each normal vanishes on at most d-1 parameter values.
  const size_t tries = 2 + d + arr.normals.size() * (d - 1);
  for (size_t t = 2; t < 2 + tries; ++t) {
    RatVec dir(d);
    Rat v(1);
    for (size_t k = 0; k < d; ++k) {
      dir[k] = v;
      v = v * Rat(static_cast<long>(t));
    }
    if (clear(dir)) return dir;
  }
  throw InternalError("generic_direction: no clear direction found");
}

namespace {

// Parallel normals describe one geometric hyperplane and must flip together
// during enumeration. Canonical key: primitive integer vector with positive
// leading entry; orient records which side of it each normal points to.
struct HyperplaneGroups {
  std::vector<std::vector<mpz_class>> keys;
  std::vector<size_t> group_of;  // per normal
  std::vector<int8_t> orient;    // per normal, +1 if aligned with the key
};

HyperplaneGroups group_parallels(const std::vector<RatVec>& normals) {
  HyperplaneGroups g;
  std::map<std::vector<mpz_class>, size_t> index;
  for (const auto& nrm : normals) {
    mpz_class den_lcm = 1;
    for (const auto& c : nrm) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> key;
    key.reserve(nrm.size());
    mpz_class gcd = 0;
    for (const auto& c : nrm) {
      mpz_class v = c.num() * (den_lcm / c.den());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
      key.push_back(std::move(v));
    }
    for (auto& v : key) v /= gcd;  // gcd > 0: normals are nonzero
    int8_t o = 1;
    for (const auto& v : key) {
      if (v != 0) {
        if (v < 0) o = -1;
        break;
      }
    }
    if (o < 0)
      for (auto& v : key) v = -v;
    auto [it, fresh] = index.emplace(std::move(key), index.size());
    g.group_of.push_back(it->second);
    g.orient.push_back(o);
    if (fresh) g.keys.push_back(it->first);
  }
  return g;
}

// Visited-set over group sign vectors, one bit per level.
class SignTrie {
 public:
  SignTrie() : pool_(1) {}

  // True when the vector was not present before.
  bool insert(const std::vector<int8_t>& signs) {
    size_t node = 0;
    bool fresh = false;
    for (int8_t s : signs) {
      int b = s > 0 ? 1 : 0;
      int32_t next = pool_[node].child[b];
      if (next < 0) {
        next = static_cast<int32_t>(pool_.size());
        pool_.emplace_back();  // may reallocate, so write back by index
        pool_[node].child[b] = next;
        fresh = true;
      }
      node = static_cast<size_t>(next);
    }
    return fresh;
  }

 private:
  struct Node {
    int32_t child[2] = {-1, -1};
  };
  std::vector<Node> pool_;
};

std::vector<int8_t> expand_signs(const HyperplaneGroups& g, const std::vector<int8_t>& group_signs) {
  std::vector<int8_t> out(g.group_of.size());
  for (size_t j = 0; j < out.size(); ++j)
    out[j] = static_cast<int8_t>(g.orient[j] * group_signs[g.group_of[j]]);
  return out;
}

long long count_positive(const std::vector<int8_t>& signs) {
  long long c = 0;
  for (int8_t s : signs)
    if (s > 0) ++c;
  return c;
}

}  // namespace

EnumerateResult enumerate_regions(const CentralArrangement& arr, const EnumerateOptions& opts) {
  EnumerateResult res;
  const size_t d = static_cast<size_t>(arr.dim);
  if (d == 0) throw Error("enumerate_regions: dimension must be positive");
  const size_t n = arr.normals.size();
  if (n == 0) {
    res.best_direction = RatVec(d, Rat(0));
    res.best_direction[0] = Rat(1);
    return res;
  }

  const HyperplaneGroups groups = group_parallels(arr.normals);
  const size_t ng = groups.keys.size();

  RatVec dir0 = generic_direction(arr);
  std::vector<int8_t> gs0(ng, 0);
  for (size_t j = 0; j < n; ++j) {
    int s = dot(arr.normals[j], dir0).sign();
    gs0[groups.group_of[j]] = static_cast<int8_t>(s * groups.orient[j]);
  }

  struct Item {
    std::vector<int8_t> group_signs;
    RatVec direction;
  };
  SignTrie tested;
  tested.insert(gs0);
  std::deque<Item> queue;
  queue.push_back({std::move(gs0), std::move(dir0)});

  res.best_positive = -1;
  while (!queue.empty()) {
    Item cur = std::move(queue.front());
    queue.pop_front();
    ++res.regions_visited;

    std::vector<int8_t> signs = expand_signs(groups, cur.group_signs);
    long long pos = count_positive(signs);
    if (pos > res.best_positive) {
      res.best_positive = pos;
      res.best_signs = signs;
      res.best_direction = cur.direction;
    }
    if (opts.collect_regions) res.regions.push_back({std::move(signs), cur.direction});

    for (size_t gflip = 0; gflip < ng; ++gflip) {
      std::vector<int8_t> next = cur.group_signs;
      next[gflip] = static_cast<int8_t>(-next[gflip]);
      if (!tested.insert(next)) continue;
      std::vector<RatVec> rows;
      rows.reserve(n);
      std::vector<int8_t> vsigns = expand_signs(groups, next);
      for (size_t j = 0; j < n; ++j)
        rows.push_back(vsigns[j] > 0 ? arr.normals[j] : negated(arr.normals[j]));
      auto witness = strict_homogeneous_lp(rows, arr.dim);
      if (witness) queue.push_back({std::move(next), std::move(*witness)});
    }
  }
  return res;
}

namespace {

struct SweepEvent {
  RatVec dir;                 // crossing direction, exact
  std::vector<size_t> flips;  // arrangement indices toggled here
};

}  // namespace

EnumerateResult radial_sweep_2d(const CentralArrangement& arr, const EnumerateOptions& opts) {
  if (arr.dim != 2) throw MethodError("radial sweep needs dimension 2");
  EnumerateResult res;
  const size_t n = arr.normals.size();
  if (n == 0) {
    res.best_direction = {Rat(1), Rat(0)};
    return res;
  }

  // Events in one clockwise turn starting just east of north. A normal with
  // nonzero second entry crosses where cot(phi) equals -w1/w2, once on the
  // eastern half (direction (1, c)) and once mirrored on the western half;
  // both halves run through the same c values in decreasing order. Normals
  // with zero second entry flip at the south and north seams. Equal-c
  // normals share one geometric line and toggle atomically.
  std::map<Rat, std::vector<size_t>, std::greater<Rat>> finite;
  std::vector<size_t> vertical;
  for (size_t j = 0; j < n; ++j) {
    const RatVec& w = arr.normals[j];
    if (w[1].is_zero())
      vertical.push_back(j);
    else
      finite[-w[0] / w[1]].push_back(j);
  }

  std::vector<SweepEvent> events;
  events.reserve(2 * finite.size() + 2);
  for (const auto& [c, idx] : finite) events.push_back({{Rat(1), c}, idx});
  if (!vertical.empty()) events.push_back({{Rat(0), Rat(-1)}, vertical});
  for (const auto& [c, idx] : finite) events.push_back({{Rat(-1), -c}, idx});
  if (!vertical.empty()) events.push_back({{Rat(0), Rat(1)}, vertical});

  // Membership just east of north: sign(w2), or sign(w1) on the seam.
  std::vector<char> member(n);
  long long pos = 0;
  for (size_t j = 0; j < n; ++j) {
    const RatVec& w = arr.normals[j];
    member[j] = w[1].is_zero() ? (w[0].sign() > 0) : (w[1].sign() > 0);
    pos += member[j];
  }
  const std::vector<char> initial = member;

  auto gap_direction = [](const RatVec& u, const RatVec& v) {
    if (u[0] == -v[0] && u[1] == -v[1]) return RatVec{u[1], -u[0]};  // quarter turn clockwise
    return add(u, v);
  };
  auto signs_now = [&]() {
    std::vector<int8_t> s(n);
    for (size_t j = 0; j < n; ++j) s[j] = member[j] ? 1 : -1;
    return s;
  };
  auto check_region = [&](const std::vector<int8_t>& s, const RatVec& dir) {
    for (size_t j = 0; j < n; ++j) {
      if (dot(arr.normals[j], dir).sign() != s[j])
        throw InternalError("radial_sweep_2d: sampled direction misses its region");
    }
  };

  res.best_positive = -1;
  size_t best_event = 0;
  for (size_t e = 0; e < events.size(); ++e) {
    for (size_t j : events[e].flips) {
      member[j] = !member[j];
      pos += member[j] ? 1 : -1;
    }
    ++res.regions_visited;
    if (pos > res.best_positive) {
      res.best_positive = pos;
      res.best_signs = signs_now();
      best_event = e;
    }
    if (opts.collect_regions) {
      RatVec dir = gap_direction(events[e].dir, events[(e + 1) % events.size()].dir);
      auto s = signs_now();
      check_region(s, dir);
      res.regions.push_back({std::move(s), std::move(dir)});
    }
  }
  if (member != initial)
    throw InternalError("radial_sweep_2d: memberships did not return to start");

  res.best_direction =
      gap_direction(events[best_event].dir, events[(best_event + 1) % events.size()].dir);
  check_region(res.best_signs, res.best_direction);
  return res;
}

RatVec scale_into_balls(const std::vector<RatVec>& offsets, int p, const RatVec& y) {
  for (const auto& z : offsets) {
    if (dot(tangent_normal(z, p), y).sign() <= 0)
      throw Error("scale_into_balls: direction not strictly feasible");
  }
  Rat lambda(1);
  for (const auto& z : offsets) {
    Rat sigma_plus(0), sigma_minus(0);
    for (size_t j = 0; j < z.size(); ++j) {
      Rat term = y[j] * signed_pow(z[j], p - 1);
      sigma_plus = sigma_plus + term;
      if (term.sign() < 0) sigma_minus = sigma_minus + term;
    }
    Rat eps;
    if (sigma_minus.is_zero()) {
      eps = Rat(1, 2);
    } else {
      Rat ratio = sigma_plus / (-sigma_minus);
      eps = pow2(-static_cast<int>(ceil_log2(ratio.den())) - p - 1);
    }
    for (size_t j = 0; j < z.size(); ++j) {
      if (z[j].is_zero() || y[j].is_zero()) continue;
      Rat cand = eps * abs(z[j] / y[j]);
      if (cand < lambda) lambda = cand;
    }
  }

  auto inside_all = [&](const RatVec& pt) {
    const RatVec origin(y.size(), Rat(0));
    for (const auto& z : offsets) {
      if (!(lp_dist_pow(pt, z, p) < lp_dist_pow(origin, z, p))) return false;
    }
    return true;
  };
  RatVec point = scaled(y, lambda);
  for (int attempt = 0; !inside_all(point); ++attempt) {
    if (attempt >= 200) throw InternalError("scale_into_balls: shrink did not converge");
    std::cerr << "scale_into_balls: closed-form shrink insufficient, halving\n";
    lambda = lambda / Rat(2);
    point = scaled(y, lambda);
  }
  return point;
}

SolveResult solve_single(const ElectionInstance& inst, SingleMethod method) {
  validate_instance(inst);
  if (inst.m() != 1) throw MethodError("single-opponent solver needs exactly one incumbent");
  if (method == SingleMethod::kSweep2d && inst.d != 2)
    throw MethodError("radial sweep needs dimension 2");

  const RatPoint& anchor = inst.candidates[0];
  CentralArrangement arr = single_arrangement(inst);
  if (arr.normals.empty()) {
    RatVec shift(inst.d, Rat(0));
    shift[0] = Rat(1);
    return finalize_result(inst, add(anchor, shift), 0, true);
  }

  const bool sweep = method == SingleMethod::kSweep2d ||
                     (method == SingleMethod::kAuto && inst.d == 2);
  EnumerateResult er = sweep ? radial_sweep_2d(arr) : enumerate_regions(arr);

  std::vector<RatVec> offsets;
  for (size_t j = 0; j < arr.normals.size(); ++j) {
    if (er.best_signs[j] > 0) offsets.push_back(sub(inst.voters[arr.voters[j]], anchor));
  }
  RatVec step = scale_into_balls(offsets, inst.p, er.best_direction);
  SolveResult res = finalize_result(inst, add(anchor, step), er.best_positive, true);
  res.regions_visited = er.regions_visited;
  return res;
}

SolveResult two_approx(const ElectionInstance& inst) {
  validate_instance(inst);
  if (inst.m() != 1) throw MethodError("two_approx needs exactly one incumbent");
  const RatPoint& anchor = inst.candidates[0];
  CentralArrangement arr = single_arrangement(inst);
  if (arr.normals.empty()) {
    RatVec shift(inst.d, Rat(0));
    shift[0] = Rat(1);
    return finalize_result(inst, add(anchor, shift), 0, false);
  }
  RatVec dir = generic_direction(arr);
  std::vector<RatVec> plus, minus;
  for (size_t j = 0; j < arr.normals.size(); ++j) {
    RatVec off = sub(inst.voters[arr.voters[j]], anchor);
    if (dot(arr.normals[j], dir).sign() > 0)
      plus.push_back(std::move(off));
    else
      minus.push_back(std::move(off));
  }
  const bool take_plus = plus.size() >= minus.size();
  const auto& offsets = take_plus ? plus : minus;
  RatVec y = take_plus ? dir : negated(dir);
  RatVec step = scale_into_balls(offsets, inst.p, y);
  SolveResult res =
      finalize_result(inst, add(anchor, step), static_cast<long long>(offsets.size()), false);
  res.regions_visited = 1;
  return res;
}

}  // namespace spatialvote
