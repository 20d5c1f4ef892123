#include "spatialvote/quadext.hpp"

#include <cmath>

#include "spatialvote/errors.hpp"

namespace spatialvote {

namespace {

constexpr unsigned kFastBits = 32;

// Sign of a + b*sqrt(D) with D >= 0 by case analysis; one squaring at most.
int pure_sign(const Rat& a, const Rat& b, const Rat& D) {
  if (b.is_zero() || D.is_zero()) return a.sign();
  if (a.is_zero()) return b.sign();
  int sa = a.sign(), sb = b.sign();
  if (sa == sb) return sa;
  int t = (a * a - b * b * D).sign();
  return t == 0 ? 0 : sa * t;
}

// Rational interval [lo, hi] containing coeff * sqrt(rad).
void accumulate_bracket(Rat& lo, Rat& hi, const Rat& coeff, const Rat& rad, unsigned bits) {
  if (coeff.is_zero() || rad.is_zero()) return;
  auto [l, h] = sqrt_bracket(rad, bits);
  if (coeff.sign() >= 0) {
    lo += coeff * l;
    hi += coeff * h;
  } else {
    lo += coeff * h;
    hi += coeff * l;
  }
}

}  // namespace

QE2::QE2(const Rat& r, const Rat& s, const Rat& D) : r_(r), s_(s), D_(D) {
  if (D_.sign() < 0) throw Error("QE2: negative radicand");
  if (s_.is_zero()) {
    D_ = Rat(0);
    return;
  }
  if (auto root = exact_sqrt(D_)) {
    r_ += s_ * *root;
    s_ = Rat(0);
    D_ = Rat(0);
  }
}

QE2 QE2::operator-() const {
  QE2 out;
  out.r_ = -r_;
  out.s_ = -s_;
  out.D_ = D_;
  return out;
}

namespace {
const Rat& common_radicand(const QE2& a, const QE2& b) {
  if (a.is_rational()) return b.D();
  if (b.is_rational()) return a.D();
  if (a.D() != b.D()) throw InternalError("QE2: mixed radicands in field operation");
  return a.D();
}
}  // namespace

QE2 operator+(const QE2& a, const QE2& b) {
  return QE2(a.r() + b.r(), a.s() + b.s(), common_radicand(a, b));
}

QE2 operator-(const QE2& a, const QE2& b) {
  return QE2(a.r() - b.r(), a.s() - b.s(), common_radicand(a, b));
}

QE2 operator*(const QE2& a, const QE2& b) {
  const Rat& D = common_radicand(a, b);
  return QE2(a.r() * b.r() + a.s() * b.s() * D, a.r() * b.s() + a.s() * b.r(), D);
}

QE2 QE2::scaled(const Rat& c) const {
  QE2 out;
  out.r_ = r_ * c;
  out.s_ = s_ * c;
  out.D_ = D_;
  return out;
}

int QE2::sign() const {
  if (s_.is_zero()) return r_.sign();
  Rat lo = r_, hi = r_;
  accumulate_bracket(lo, hi, s_, D_, kFastBits);
  if (lo.sign() > 0) return 1;
  if (hi.sign() < 0) return -1;
  return pure_sign(r_, s_, D_);
}

double QE2::approx() const { return r_.approx() + s_.approx() * std::sqrt(D_.approx()); }

void QuadExtNum::add_sqrt_term(const Rat& coeff, const Rat& radicand) {
  if (radicand.sign() < 0) throw Error("QuadExtNum: negative radicand");
  if (coeff.is_zero() || radicand.is_zero()) return;
  if (auto root = exact_sqrt(radicand)) {
    a_ += coeff * *root;
    return;
  }
  auto try_slot = [&](Rat& slot_coeff, const Rat& slot_rad) {
    if (slot_rad.is_zero()) return false;
    if (auto t = exact_sqrt(radicand / slot_rad)) {
      slot_coeff += coeff * *t;
      return true;
    }
    return false;
  };
  if (try_slot(b_, u_)) return;
  if (try_slot(e_, v_)) return;
  if (!u_.is_zero() && !v_.is_zero() && try_slot(f_, u_ * v_)) return;
  if (u_.is_zero()) {
    u_ = radicand;
    b_ = coeff;
    return;
  }
  if (v_.is_zero()) {
    v_ = radicand;
    e_ = coeff;
    return;
  }
  throw InternalError("QuadExtNum: more than two independent radicals");
}

void QuadExtNum::add(const QuadExtNum& o) {
  a_ += o.a_;
  add_sqrt_term(o.b_, o.u_);
  add_sqrt_term(o.e_, o.v_);
  if (!o.f_.is_zero()) add_sqrt_term(o.f_, o.u_ * o.v_);
}

void QuadExtNum::sub(const QuadExtNum& o) {
  a_ -= o.a_;
  add_sqrt_term(-o.b_, o.u_);
  add_sqrt_term(-o.e_, o.v_);
  if (!o.f_.is_zero()) add_sqrt_term(-o.f_, o.u_ * o.v_);
}

QuadExtNum QuadExtNum::product(const QE2& x, const QE2& y) {
  QuadExtNum out;
  out.a_ = x.r() * y.r();
  out.add_sqrt_term(x.r() * y.s(), y.D());
  out.add_sqrt_term(x.s() * y.r(), x.D());
  out.add_sqrt_term(x.s() * y.s(), x.D() * y.D());
  return out;
}

int QuadExtNum::sign() const {
  if (v_.is_zero()) return pure_sign(a_, b_, u_);

  Rat lo = a_, hi = a_;
  accumulate_bracket(lo, hi, b_, u_, kFastBits);
  accumulate_bracket(lo, hi, e_, v_, kFastBits);
  accumulate_bracket(lo, hi, f_, u_ * v_, kFastBits);
  if (lo.sign() > 0) return 1;
  if (hi.sign() < 0) return -1;

  // Value = A + B*sqrt(v) with A = a + b*sqrt(u), B = e + f*sqrt(u).
  // sqrt(v) is not in Q(sqrt(u)) by the slot invariant, so the squared
  // comparison below vanishes only when the value itself is zero.
  int sA = pure_sign(a_, b_, u_);
  int sB = pure_sign(e_, f_, u_);
  if (sB == 0) return sA;
  if (sA == 0) return sB;
  if (sA == sB) return sA;
  // A^2 and B^2 * v as elements of Q(sqrt(u)).
  Rat A2r = a_ * a_ + b_ * b_ * u_;
  Rat A2s = Rat(2) * a_ * b_;
  Rat B2r = (e_ * e_ + f_ * f_ * u_) * v_;
  Rat B2s = Rat(2) * e_ * f_ * v_;
  int t = pure_sign(A2r - B2r, A2s - B2s, u_);
  return t == 0 ? 0 : sA * t;
}

double QuadExtNum::approx() const {
  double u = u_.approx(), v = v_.approx();
  return a_.approx() + b_.approx() * std::sqrt(u) + e_.approx() * std::sqrt(v) +
         f_.approx() * std::sqrt(u * v);
}

}  // namespace spatialvote
