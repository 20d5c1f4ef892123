#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spatialvote/rational.hpp"

namespace spatialvote {

using RatVec = std::vector<Rat>;
using RatPoint = RatVec;

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scaled(const RatVec& v, const Rat& s);
RatVec negated(const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);
Rat norm2_pow(const RatVec& v);  // sum of squares
bool is_zero(const RatVec& v);

/// "r1,r2,...,rd" with Rat::parse per coordinate.
std::optional<RatPoint> parse_point(std::string_view s);
std::string format_point(const RatPoint& p);

}  // namespace spatialvote
