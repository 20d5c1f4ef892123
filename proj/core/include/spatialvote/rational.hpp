#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace spatialvote {

/// Exact rational number. Always canonical: denominator > 0 and
/// gcd(numerator, denominator) = 1, including right after construction
/// from an arbitrary num/den pair.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int v) : v_(v) {}
  Rat(long v) : v_(static_cast<signed long>(v)) {}
  Rat(long num, long den);
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { mpq_canonicalize(v_.get_mpq_t()); }

  /// Strict parse of "n" or "n/d" with optional leading minus, nothing else.
  static std::optional<Rat> parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "n" when integral, "n/d" otherwise.
  std::string str() const;
  double approx() const { return v_.get_d(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

Rat abs(const Rat& r);

/// r^e for e >= 0 (0^0 = 1).
Rat pow_nat(const Rat& r, unsigned e);

/// |r|^e * sign(r), the signed power used by tangent coefficients.
Rat signed_pow(const Rat& r, unsigned e);

/// 2^e as a rational; negative e gives 1/2^-e.
Rat pow2(int e);

/// Exact square root if r is a perfect square of a rational, else nullopt.
/// Requires r >= 0.
std::optional<Rat> exact_sqrt(const Rat& r);

/// Dyadic bracket lo <= sqrt(r) < hi with hi - lo = 2^-bits. Requires r >= 0.
std::pair<Rat, Rat> sqrt_bracket(const Rat& r, unsigned bits);

/// Smallest k with 2^k >= v. Requires v >= 1.
unsigned ceil_log2(const mpz_class& v);

}  // namespace spatialvote
