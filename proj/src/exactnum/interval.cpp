#include "packcert/exactnum/interval.hpp"

#include <algorithm>
#include <ostream>

namespace packcert::exactnum {

Interval::Interval(Rational point) : lo_(point), hi_(std::move(point)) {}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) {
    throw std::invalid_argument("interval with lo > hi: [" + to_string(lo_) + ", " +
                                to_string(hi_) + "]");
  }
}

Rational Interval::midpoint() const { return (lo_ + hi_) / 2; }

Rational Interval::magnitude() const {
  Rational a = abs(lo_);
  Rational b = abs(hi_);
  return a > b ? a : b;
}

Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo() - b.hi(), a.hi() - b.lo());
}

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo() >= 0 && b.lo() >= 0) return Interval(a.lo() * b.lo(), a.hi() * b.hi());
  Rational p1 = a.lo() * b.lo();
  Rational p2 = a.lo() * b.hi();
  Rational p3 = a.hi() * b.lo();
  Rational p4 = a.hi() * b.hi();
  return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DivisionByZero("division by an interval containing zero");
  Interval reciprocal(1 / b.hi(), 1 / b.lo());
  return a * reciprocal;
}

Interval square(const Interval& a) {
  Rational l2 = a.lo() * a.lo();
  Rational h2 = a.hi() * a.hi();
  if (a.contains_zero()) return Interval(0, std::max(l2, h2));
  return l2 < h2 ? Interval(l2, h2) : Interval(h2, l2);
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval intersect(const Interval& a, const Interval& b) {
  Rational lo = std::max(a.lo(), b.lo());
  Rational hi = std::min(a.hi(), b.hi());
  if (lo > hi) throw std::domain_error("empty interval intersection");
  return Interval(lo, hi);
}

Interval round_outward(const Interval& a, long bits) {
  const auto limit = static_cast<std::size_t>(bits) + 1;
  Rational lo = denominator_bits(a.lo()) > limit ? floor_dyadic(a.lo(), bits) : a.lo();
  Rational hi = denominator_bits(a.hi()) > limit ? ceil_dyadic(a.hi(), bits) : a.hi();
  return Interval(std::move(lo), std::move(hi));
}

namespace {

// Bounds of sqrt(x) for x >= 0, accurate to 2^-bits; exact on perfect squares.
Rational sqrt_bound(const Rational& x, long bits, bool upper) {
  if (x == 0) return 0;
  if (mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t())) {
    Integer n;
    Integer d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    return Rational(n, d);
  }
  Integer num = x.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * bits));
  Integer t;
  if (upper) {
    mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  } else {
    mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  }
  Integer s;
  mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
  if (upper && s * s < t) s += 1;
  Rational result(s, Integer(1));
  mpq_div_2exp(result.get_mpq_t(), result.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  return result;
}

}  // namespace

Interval sqrt(const Interval& a, long bits) {
  if (a.lo() < 0) throw std::domain_error("sqrt of an interval with negative lower bound");
  return Interval(sqrt_bound(a.lo(), bits, false), sqrt_bound(a.hi(), bits, true));
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << "[" << to_string(iv.lo()) << ", " << to_string(iv.hi()) << "]";
}

}  // namespace packcert::exactnum
