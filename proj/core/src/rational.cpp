#include "spatialvote/rational.hpp"

#include <cctype>
#include <ostream>

#include "spatialvote/errors.hpp"

namespace spatialvote {

Rat::Rat(long num, long den) {
  if (den == 0) throw Error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  mpq_canonicalize(v_.get_mpq_t());
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("Rat: zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

std::optional<Rat> Rat::parse(std::string_view s) {
  auto is_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  bool neg = false;
  if (!s.empty() && s[0] == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_digits(num) || !is_digits(den)) return std::nullopt;
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (neg) n = -n;
  return Rat(n, d);
}

std::string Rat::str() const {
  std::string out = v_.get_num().get_str();
  if (!is_integer()) {
    out += '/';
    out += v_.get_den().get_str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow_nat(const Rat& r, unsigned e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), e);
  return Rat(n, d);
}

Rat signed_pow(const Rat& r, unsigned e) {
  Rat m = pow_nat(abs(r), e);
  return r.sign() < 0 ? -m : m;
}

Rat pow2(int e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned>(e < 0 ? -e : e));
  return e >= 0 ? Rat(p, 1) : Rat(1, p);
}

std::optional<Rat> exact_sqrt(const Rat& r) {
  if (r.sign() < 0) throw Error("exact_sqrt: negative argument");
  if (r.is_zero()) return Rat(0);
  mpz_class n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rat(sn, sd);
}

std::pair<Rat, Rat> sqrt_bracket(const Rat& r, unsigned bits) {
  if (r.sign() < 0) throw Error("sqrt_bracket: negative argument");
  // y = floor(sqrt(floor(num * 4^bits / den))) gives y/2^bits <= sqrt(r) < (y+1)/2^bits.
  mpz_class scaled = r.num() << (2 * bits);
  mpz_class q = scaled / r.den();
  mpz_class y;
  mpz_sqrt(y.get_mpz_t(), q.get_mpz_t());
  mpz_class two_bits = mpz_class(1) << bits;
  return {Rat(y, two_bits), Rat(y + 1, two_bits)};
}

unsigned ceil_log2(const mpz_class& v) {
  if (v < 1) throw Error("ceil_log2: argument below 1");
  size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);  // floor(log2) + 1
  bool pow_of_two = mpz_popcount(v.get_mpz_t()) == 1;
  return static_cast<unsigned>(pow_of_two ? bits - 1 : bits);
}

}  // namespace spatialvote
