#pragma once

#include "spatialvote/rational.hpp"

namespace spatialvote {

/// Element r + s*sqrt(D) of a real quadratic extension of the rationals.
/// Normalized: if D is zero or a perfect square the radical part is folded
/// into r and s becomes 0; when s != 0, D > 0 and D is not a perfect square.
class QE2 {
 public:
  QE2() = default;
  QE2(const Rat& r) : r_(r) {}
  QE2(int r) : r_(Rat(r)) {}
  QE2(const Rat& r, const Rat& s, const Rat& D);

  const Rat& r() const { return r_; }
  const Rat& s() const { return s_; }
  const Rat& D() const { return D_; }
  bool is_rational() const { return s_.is_zero(); }
  bool is_zero() const { return r_.is_zero() && s_.is_zero(); }

  QE2 operator-() const;
  friend QE2 operator+(const QE2& a, const QE2& b);
  friend QE2 operator-(const QE2& a, const QE2& b);
  friend QE2 operator*(const QE2& a, const QE2& b);
  QE2 scaled(const Rat& c) const;

  /// Exact sign in {-1, 0, +1}: dyadic-bracket fast path, then case analysis
  /// with one squaring.
  int sign() const;
  double approx() const;

 private:
  Rat r_, s_, D_;
};

/// Sum a + b*sqrt(u) + e*sqrt(v) + f*sqrt(u*v) in a real biquadratic
/// extension. Terms are added through add_sqrt_term, which classifies each
/// radicand against the active radicals (folding perfect-square ratios), so
/// degenerate combinations collapse automatically. At most two independent
/// radicals may appear.
class QuadExtNum {
 public:
  QuadExtNum() = default;
  explicit QuadExtNum(const Rat& a) : a_(a) {}

  /// Adds coeff * sqrt(radicand). Requires radicand >= 0.
  void add_sqrt_term(const Rat& coeff, const Rat& radicand);
  void add_rational(const Rat& c) { a_ += c; }

  void add(const QuadExtNum& o);
  void sub(const QuadExtNum& o);

  /// x * y for elements of possibly different quadratic extensions.
  static QuadExtNum product(const QE2& x, const QE2& y);

  /// Exact sign in {-1, 0, +1}: dyadic-bracket fast path, then recursive
  /// case analysis with repeated squaring.
  int sign() const;
  double approx() const;

 private:
  // a + b*sqrt(u) + e*sqrt(v) + f*sqrt(u*v); u, v positive non-squares with
  // v/u not a perfect square; inactive slots hold 0.
  Rat a_, b_, u_, e_, v_, f_;
};

}  // namespace spatialvote
