#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "packcert/exactnum/interval.hpp"
#include "packcert/exactnum/polynomial.hpp"

namespace packcert::exactnum {

/// Sturm sequence of a square-free polynomial over exact rationals.
class SturmSequence {
 public:
  explicit SturmSequence(const IntegerPolynomial& square_free);

  int variations(const Rational& x) const;
  /// Distinct real roots in the half-open interval (lo, hi].
  std::size_t count(const Rational& lo, const Rational& hi) const;
  std::size_t size() const { return chain_.size(); }

 private:
  // Scaled to integer coefficients; signs are all that matter.
  std::vector<IntegerPolynomial> chain_;
};

/// Number of distinct real roots of p in (iv.lo, iv.hi]. Square-free
/// reduction happens internally. Throws DegeneratePolynomial for p == 0.
std::size_t sturm_count(const IntegerPolynomial& p, const Interval& iv);

/// A real root of an integer polynomial, pinned by an isolating interval.
///
/// Either the interval is a single rational point that is an exact root, or
/// the polynomial is nonzero with opposite signs at both endpoints and has
/// exactly one root inside.
class AlgebraicNumber {
 public:
  /// Validates the isolation invariant; throws std::invalid_argument.
  AlgebraicNumber(IntegerPolynomial poly, Interval isolating, std::string name = {});

  /// Square-free defining polynomial.
  const IntegerPolynomial& poly() const { return poly_; }
  const Interval& isolating() const { return isol_; }
  const std::string& name() const { return name_; }
  bool is_rational() const { return isol_.is_point(); }

  AlgebraicNumber renamed(std::string name) const;

 private:
  struct Trusted {};
  AlgebraicNumber(Trusted, IntegerPolynomial poly, Interval isolating, std::string name);
  friend std::vector<AlgebraicNumber> isolate_roots(const IntegerPolynomial&,
                                                    const Interval&, std::string_view);
  friend AlgebraicNumber refine(const AlgebraicNumber&, const Rational&);

  IntegerPolynomial poly_;
  Interval isol_;
  std::string name_;
};

/// Isolating intervals, in increasing order, for every distinct real root of
/// p in the closed bracket. A degenerate bracket yields either one rational
/// root or nothing. Throws DegeneratePolynomial for p == 0.
std::vector<AlgebraicNumber> isolate_roots(const IntegerPolynomial& p,
                                           const Interval& bracket,
                                           std::string_view name = {});

/// Bisects until the isolating interval has width <= width (width > 0).
/// Deterministic, so smaller targets give nested results.
AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width);

}  // namespace packcert::exactnum
