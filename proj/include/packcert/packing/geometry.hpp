#pragma once

#include <stdexcept>

#include "packcert/exactnum/expression.hpp"
#include "packcert/exactnum/interval.hpp"

namespace packcert::packing {

using exactnum::Expression;
using exactnum::Interval;
using exactnum::Rational;

/// Radius of the inner Soddy circle of three mutually tangent discs:
/// k4 = k1 + k2 + k3 + 2 sqrt(k1 k2 + k2 k3 + k3 k1), k_i = 1 / r_i.
Expression descartes_inner_expression(const Expression& r1, const Expression& r2,
                                      const Expression& r3);

/// Enclosure of the inner Soddy radius. Radii must be certified positive
/// (std::invalid_argument otherwise).
Interval descartes_inner(const Interval& r1, const Interval& r2, const Interval& r3,
                         const Rational& width);

/// Fraction of the triangle joining the centers of three mutually tangent
/// discs that the discs cover: sector areas over the Heron area.
Expression triangle_density_expression(const Expression& a, const Expression& b,
                                       const Expression& c);

/// Enclosure of triangle_density_expression. Symmetric in its arguments
/// (inputs are put in a canonical order before evaluation).
Interval triangle_density(const Interval& a, const Interval& b, const Interval& c,
                          const Rational& width);

class MarginError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct MarginReport {
  /// False when d_high and d_low overlap so the sign of the margin is open.
  bool conclusive = false;
  /// Removable fraction, clamped to [0, 1].
  Interval fraction;
};

/// Largest fraction of a disc class that can be removed while the density
/// stays above d_low: (d_high - d_low) / class_contribution.
/// Throws MarginError("no margin") when d_high <= d_low is certified and the
/// two are not the same exact value; std::invalid_argument when the
/// contribution is not certified positive.
MarginReport removal_margin(const Interval& d_high, const Interval& d_low,
                            const Interval& class_contribution);

}  // namespace packcert::packing
