#pragma once

#include <iosfwd>
#include <stdexcept>

#include "packcert/exactnum/rational.hpp"

namespace packcert::exactnum {

/// Closed interval [lo, hi] with exact rational endpoints.
class Interval {
 public:
  Interval() = default;
  explicit Interval(Rational point);
  /// Throws std::invalid_argument when lo > hi.
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const;

  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
  bool certainly_positive() const { return lo_ > 0; }
  bool certainly_negative() const { return hi_ < 0; }
  bool overlaps(const Interval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }

  /// Largest absolute value over the interval.
  Rational magnitude() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_{0};
  Rational hi_{0};
};

// Exact interval arithmetic; endpoints grow without rounding.
Interval operator-(const Interval& a);
Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws DivisionByZero when the divisor contains 0.
Interval operator/(const Interval& a, const Interval& b);

Interval square(const Interval& a);
Interval hull(const Interval& a, const Interval& b);
/// Throws std::domain_error when the intersection is empty.
Interval intersect(const Interval& a, const Interval& b);

/// Rounds endpoints outward to multiples of 2^-bits. Endpoints whose
/// denominators already fit are left untouched, so exact values stay exact.
Interval round_outward(const Interval& a, long bits);

/// Enclosure of sqrt over a nonnegative interval, endpoints accurate to
/// 2^-bits. Exact for perfect-square rational endpoints.
/// Throws std::domain_error if lo < 0.
Interval sqrt(const Interval& a, long bits);

std::ostream& operator<<(std::ostream& os, const Interval& iv);

}  // namespace packcert::exactnum
