#include "packcert/packing/tangency.hpp"

namespace packcert::packing {

using exactnum::Direction;
using exactnum::Status;

namespace {

struct Solved {
  Disc disc;
  std::vector<Contact> contacts;
};

Solved solve_one(const PeriodicPacking& p, const SolveRule& rule, int max_depth) {
  if (p.has_disc(rule.id)) {
    throw TangencyError("solve target " + std::to_string(rule.id) + " is already placed");
  }
  for (const Anchor& a : {rule.first, rule.second}) {
    if (!p.has_disc(a.id)) {
      throw TangencyError("anchor disc " + std::to_string(a.id) + " is not placed yet");
    }
  }
  const Expression own = p.radius_class(rule.radius).value;
  const Expression ax = p.center_x(rule.first.id, rule.first.offset);
  const Expression ay = p.center_y(rule.first.id, rule.first.offset);
  const Expression dx = p.center_x(rule.second.id, rule.second.offset) - ax;
  const Expression dy = p.center_y(rule.second.id, rule.second.offset) - ay;
  const Expression ra = own + p.radius(rule.first.id);
  const Expression rb = own + p.radius(rule.second.id);

  // Intersection of |P - A| = ra and |P - B| = rb, with d2 = |B - A|^2:
  // P = A + lambda (B - A) +/- sqrt(disc) / (2 d2) * perp(B - A).
  const Expression d2 = square(dx) + square(dy);
  const Expression numerator = square(ra) - square(rb) + d2;
  const Expression lambda = numerator / (Expression(2L) * d2);
  const Expression disc = Expression(4L) * square(ra) * d2 - square(numerator);

  const auto& b = p.bindings();
  auto sign = exactnum::certify_compare(disc, 0, Direction::Above, b, max_depth);
  if (sign.status == Status::Disproved) throw TangencyError("inconsistent tangency");
  if (sign.status == Status::Inconclusive) {
    throw TangencyError("inconsistent tangency (discriminant sign unresolved)");
  }

  // +1 picks the left of A -> B, i.e. along (-dy, dx).
  int side = 1;
  switch (rule.pick) {
    case Side::Left:
      side = 1;
      break;
    case Side::Right:
      side = -1;
      break;
    case Side::Upper:
    case Side::Lower: {
      auto v = exactnum::certify_compare(dx, 0, Direction::Above, b, max_depth);
      if (v.status == Status::Inconclusive) throw TangencyError("ambiguous side rule");
      const bool left_is_upper = v.status == Status::Proved;
      side = (left_is_upper == (rule.pick == Side::Upper)) ? 1 : -1;
      break;
    }
  }
  const Expression k = sqrt(disc) / (Expression(2L) * d2);
  Expression x = ax + lambda * dx;
  Expression y = ay + lambda * dy;
  if (side > 0) {
    x = x - k * dy;
    y = y + k * dx;
  } else {
    x = x + k * dy;
    y = y - k * dx;
  }
  return Solved{Disc{rule.id, x, y, rule.radius},
                {Contact{rule.id, rule.first.id, rule.first.offset},
                 Contact{rule.id, rule.second.id, rule.second.offset}}};
}

}  // namespace

PeriodicPacking complete_tangencies(const PeriodicPacking& partial,
                                    const std::vector<SolveRule>& rules, int max_depth) {
  PeriodicPacking current = partial;
  for (const auto& rule : rules) {
    Solved s = solve_one(current, rule, max_depth);
    current = current.with_additions({std::move(s.disc)}, std::move(s.contacts));
  }
  return current;
}

Side parse_side(const std::string& text) {
  if (text == "left") return Side::Left;
  if (text == "right") return Side::Right;
  if (text == "upper") return Side::Upper;
  if (text == "lower") return Side::Lower;
  throw std::invalid_argument("unknown side '" + text + "' (expected left|right|upper|lower)");
}

const char* to_string(Side side) {
  switch (side) {
    case Side::Left:
      return "left";
    case Side::Right:
      return "right";
    case Side::Upper:
      return "upper";
    case Side::Lower:
      return "lower";
  }
  return "?";
}

}  // namespace packcert::packing
