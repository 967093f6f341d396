#include "packcert/exactnum/roots.hpp"

#include <utility>

#include "poly_detail.hpp"

namespace packcert::exactnum {

SturmSequence::SturmSequence(const IntegerPolynomial& square_free) {
  if (square_free.is_zero()) throw DegeneratePolynomial();
  chain_.push_back(square_free);
  if (square_free.degree() == 0) return;
  chain_.push_back(square_free.derivative());
  auto prev = detail::to_rational(chain_[0]);
  auto cur = detail::to_rational(chain_[1]);
  for (;;) {
    auto r = detail::remainder(prev, cur);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain_.push_back(detail::positive_primitive(r));
    prev = std::move(cur);
    cur = detail::to_rational(chain_.back());
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (lo >= hi) return 0;
  return static_cast<std::size_t>(variations(lo) - variations(hi));
}

std::size_t sturm_count(const IntegerPolynomial& p, const Interval& iv) {
  SturmSequence sturm(square_free_part(p));
  return sturm.count(iv.lo(), iv.hi());
}

AlgebraicNumber::AlgebraicNumber(IntegerPolynomial poly, Interval isolating, std::string name)
    : poly_(square_free_part(poly)), isol_(std::move(isolating)), name_(std::move(name)) {
  if (isol_.is_point()) {
    if (poly_.sign_at(isol_.lo()) != 0) {
      throw std::invalid_argument("point interval is not a root of the polynomial");
    }
    return;
  }
  int slo = poly_.sign_at(isol_.lo());
  int shi = poly_.sign_at(isol_.hi());
  if (slo == 0 || shi == 0 || slo == shi) {
    throw std::invalid_argument("isolating interval lacks a strict sign change");
  }
  if (SturmSequence(poly_).count(isol_.lo(), isol_.hi()) != 1) {
    throw std::invalid_argument("isolating interval contains more than one root");
  }
}

AlgebraicNumber::AlgebraicNumber(Trusted, IntegerPolynomial poly, Interval isolating,
                                 std::string name)
    : poly_(std::move(poly)), isol_(std::move(isolating)), name_(std::move(name)) {}

AlgebraicNumber AlgebraicNumber::renamed(std::string name) const {
  return AlgebraicNumber(Trusted{}, poly_, isol_, std::move(name));
}

namespace {

struct Isolator {
  const IntegerPolynomial& poly;
  const SturmSequence& sturm;
  std::vector<Interval>& out;

  void emit(Interval iv) { out.push_back(std::move(iv)); }

  void run(const Rational& a, const Rational& b, std::size_t roots) {
    if (roots == 0) return;
    if (roots == 1) {
      int sb = poly.sign_at(b);
      if (sb == 0) {
        emit(Interval(b));
        return;
      }
      if (poly.sign_at(a) != 0) {
        emit(Interval(a, b));
        return;
      }
    }
    Rational m = (a + b) / 2;
    std::size_t left = sturm.count(a, m);
    run(a, m, left);
    run(m, b, roots - left);
  }
};

}  // namespace

std::vector<AlgebraicNumber> isolate_roots(const IntegerPolynomial& p, const Interval& bracket,
                                           std::string_view name) {
  IntegerPolynomial sq = square_free_part(p);
  SturmSequence sturm(sq);
  std::vector<Interval> found;
  Isolator iso{sq, sturm, found};
  if (sq.sign_at(bracket.lo()) == 0) iso.emit(Interval(bracket.lo()));
  if (!bracket.is_point()) {
    iso.run(bracket.lo(), bracket.hi(), sturm.count(bracket.lo(), bracket.hi()));
  }
  std::vector<AlgebraicNumber> out;
  for (auto& iv : found) {
    out.push_back(AlgebraicNumber(AlgebraicNumber::Trusted{}, sq, std::move(iv), std::string(name)));
  }
  return out;
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refinement width must be positive");
  if (a.is_rational() || a.isolating().width() <= width) return a;
  const auto& p = a.poly();
  Rational lo = a.isolating().lo();
  Rational hi = a.isolating().hi();
  const int sign_lo = p.sign_at(lo);
  while (hi - lo > width) {
    Rational m = (lo + hi) / 2;
    int s = p.sign_at(m);
    if (s == 0) {
      return AlgebraicNumber(AlgebraicNumber::Trusted{}, p, Interval(m), a.name());
    }
    if (s == sign_lo) {
      lo = m;
    } else {
      hi = m;
    }
  }
  return AlgebraicNumber(AlgebraicNumber::Trusted{}, p, Interval(lo, hi), a.name());
}

}  // namespace packcert::exactnum
