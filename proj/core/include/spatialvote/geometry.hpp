#pragma once

#include "spatialvote/point.hpp"

namespace spatialvote {

/// {x : coeffs . x = offset}. coeffs must not be all zero.
struct Hyperplane {
  RatVec coeffs;
  Rat offset;
};

/// Open lp ball {x : sum_j |x_j - center_j|^p < radius_pow} with p = norm_exp.
/// radius_pow stores r^p, so everything stays rational for integer p.
/// radius_pow == 0 denotes the empty ball: both the open membership test and
/// the closure test are false everywhere (the closure of the empty set).
struct OpenBall {
  RatPoint center;
  Rat radius_pow;
  int norm_exp = 2;
};

/// sum_j |a_j - b_j|^p. Requires p >= 1.
Rat lp_dist_pow(const RatPoint& a, const RatPoint& b, int p);

bool in_open_ball(const RatPoint& x, const OpenBall& b);
bool in_closed_ball(const RatPoint& x, const OpenBall& b);

/// Sign of coeffs . x - offset.
int side_of(const Hyperplane& h, const RatPoint& x);

}  // namespace spatialvote
