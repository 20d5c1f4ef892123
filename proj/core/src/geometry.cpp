#include "spatialvote/geometry.hpp"

#include "spatialvote/errors.hpp"

namespace spatialvote {

Rat lp_dist_pow(const RatPoint& a, const RatPoint& b, int p) {
  if (a.size() != b.size()) throw Error("lp_dist_pow: dimension mismatch");
  if (p < 1) throw Error("lp_dist_pow: p must be >= 1");
  Rat acc;
  for (size_t j = 0; j < a.size(); ++j)
    acc += pow_nat(abs(a[j] - b[j]), static_cast<unsigned>(p));
  return acc;
}

bool in_open_ball(const RatPoint& x, const OpenBall& b) {
  if (b.radius_pow.sign() <= 0) return false;
  return lp_dist_pow(x, b.center, b.norm_exp) < b.radius_pow;
}

bool in_closed_ball(const RatPoint& x, const OpenBall& b) {
  if (b.radius_pow.sign() <= 0) return false;
  return lp_dist_pow(x, b.center, b.norm_exp) <= b.radius_pow;
}

int side_of(const Hyperplane& h, const RatPoint& x) {
  return (dot(h.coeffs, x) - h.offset).sign();
}

}  // namespace spatialvote
