#include "packcert/packing/geometry.hpp"

#include <algorithm>
#include <array>

#include "packcert/exactnum/evaluate.hpp"

namespace packcert::packing {
namespace {

// Evaluates at rising precision until the width target is met or more bits
// stop helping; fixed interval inputs bound the attainable width.
Interval evaluate_to_width(const Expression& e, const exactnum::Environment& env,
                           const Rational& width) {
  Interval best = exactnum::evaluate(e, env, 64);
  for (long bits = 128; bits <= 1024 && best.width() > width; bits *= 2) {
    Interval next = exactnum::evaluate(e, env, bits);
    if (next.width() >= best.width()) break;
    best = next;
  }
  return best;
}

void require_positive(const Interval& r) {
  if (!r.certainly_positive()) throw std::invalid_argument("radius not certified positive");
}

}  // namespace

Expression descartes_inner_expression(const Expression& r1, const Expression& r2,
                                      const Expression& r3) {
  Expression k1 = Expression(1L) / r1;
  Expression k2 = Expression(1L) / r2;
  Expression k3 = Expression(1L) / r3;
  Expression k4 = k1 + k2 + k3 + Expression(2L) * sqrt(k1 * k2 + k2 * k3 + k3 * k1);
  return Expression(1L) / k4;
}

Interval descartes_inner(const Interval& r1, const Interval& r2, const Interval& r3,
                         const Rational& width) {
  require_positive(r1);
  require_positive(r2);
  require_positive(r3);
  exactnum::Environment env{{"r1", r1}, {"r2", r2}, {"r3", r3}};
  auto v = [](const char* n) { return Expression::variable(n); };
  return evaluate_to_width(descartes_inner_expression(v("r1"), v("r2"), v("r3")), env, width);
}

Expression triangle_density_expression(const Expression& a, const Expression& b,
                                       const Expression& c) {
  const Expression one(1L);
  const Expression two(2L);
  // Angle at a center via the law of cosines on sides a+b, a+c, b+c:
  // cos = 1 - 2 * (product of the other radii) / ((a+b)(a+c)).
  auto angle = [&](const Expression& x, const Expression& y, const Expression& z) {
    return acos(one - two * y * z / ((x + y) * (x + z)));
  };
  Expression sectors = angle(a, b, c) * square(a) + angle(b, a, c) * square(b) +
                       angle(c, a, b) * square(c);
  Expression area = sqrt((a + b + c) * a * b * c);
  return sectors / (two * area);
}

Interval triangle_density(const Interval& a, const Interval& b, const Interval& c,
                          const Rational& width) {
  require_positive(a);
  require_positive(b);
  require_positive(c);
  std::array<Interval, 3> r{a, b, c};
  std::sort(r.begin(), r.end(), [](const Interval& x, const Interval& y) {
    return x.lo() != y.lo() ? x.lo() < y.lo() : x.hi() < y.hi();
  });
  exactnum::Environment env{{"a", r[0]}, {"b", r[1]}, {"c", r[2]}};
  auto v = [](const char* n) { return Expression::variable(n); };
  return evaluate_to_width(triangle_density_expression(v("a"), v("b"), v("c")), env, width);
}

MarginReport removal_margin(const Interval& d_high, const Interval& d_low,
                            const Interval& class_contribution) {
  if (!class_contribution.certainly_positive()) {
    throw std::invalid_argument("class contribution not certified positive");
  }
  if (d_high.is_point() && d_high == d_low) return {true, Interval(0)};
  if (d_high.hi() <= d_low.lo()) throw MarginError("no margin");
  Interval raw = (d_high - d_low) / class_contribution;
  Rational lo = std::clamp(raw.lo(), Rational(0), Rational(1));
  Rational hi = std::clamp(raw.hi(), Rational(0), Rational(1));
  return {d_high.lo() > d_low.hi(), Interval(lo, hi)};
}

}  // namespace packcert::packing
