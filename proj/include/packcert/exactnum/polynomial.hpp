#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "packcert/exactnum/rational.hpp"

namespace packcert::exactnum {

inline constexpr int kDefaultDegreeCap = 64;

class DegeneratePolynomial : public std::invalid_argument {
 public:
  DegeneratePolynomial() : std::invalid_argument("degenerate polynomial") {}
};

/// Univariate polynomial with integer coefficients in ascending order:
/// coeffs()[i] is the coefficient of x^i. Trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  /// Throws std::invalid_argument when the degree exceeds `degree_cap`.
  explicit IntegerPolynomial(std::vector<Integer> coeffs,
                             int degree_cap = kDefaultDegreeCap);

  /// Parses the comma-separated ascending form "144,-1056,...,9".
  static IntegerPolynomial parse(std::string_view text,
                                 int degree_cap = kDefaultDegreeCap);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;
  IntegerPolynomial derivative() const;

  /// Comma-separated ascending coefficients.
  std::string to_string() const;

  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// p / gcd(p, p'), primitive with positive leading coefficient.
/// Throws DegeneratePolynomial for the zero polynomial.
IntegerPolynomial square_free_part(const IntegerPolynomial& p);

}  // namespace packcert::exactnum
