#pragma once

#include <vector>

#include "packcert/exactnum/polynomial.hpp"

namespace packcert::exactnum::detail {

using RationalPoly = std::vector<Rational>;  // ascending, trimmed

RationalPoly to_rational(const IntegerPolynomial& p);
void trim(RationalPoly& p);
RationalPoly remainder(RationalPoly a, const RationalPoly& b);
RationalPoly quotient(RationalPoly a, const RationalPoly& b);
RationalPoly gcd(RationalPoly a, RationalPoly b);
/// Scales by a positive rational to coprime integer coefficients.
IntegerPolynomial positive_primitive(const RationalPoly& p);

}  // namespace packcert::exactnum::detail
