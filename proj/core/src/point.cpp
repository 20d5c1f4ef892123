#include "spatialvote/point.hpp"

#include "spatialvote/errors.hpp"

namespace spatialvote {

namespace {
void check_dims(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error("vector dimension mismatch");
}
}  // namespace

RatVec add(const RatVec& a, const RatVec& b) {
  check_dims(a, b);
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  check_dims(a, b);
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scaled(const RatVec& v, const Rat& s) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

RatVec negated(const RatVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  check_dims(a, b);
  Rat acc;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat norm2_pow(const RatVec& v) {
  Rat acc;
  for (const Rat& x : v) acc += x * x;
  return acc;
}

bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<RatPoint> parse_point(std::string_view s) {
  RatPoint out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    std::string_view tok = s.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                           : comma - start);
    auto r = Rat::parse(tok);
    if (!r) return std::nullopt;
    out.push_back(*r);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::string format_point(const RatPoint& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += p[i].str();
  }
  return out;
}

}  // namespace spatialvote
