#include "packcert/verifier/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "packcert/packing/geometry.hpp"

namespace packcert::verifier {

using exactnum::Direction;
using exactnum::Rational;
using exactnum::Status;

const char* to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(Order o) {
  switch (o) {
    case Order::FirstDenser: return "first denser";
    case Order::SecondDenser: return "second denser";
    case Order::Inconclusive: return "inconclusive";
  }
  return "?";
}

CompactnessVerdict check_compact(const ContactGraph& g) {
  for (const auto& f : g.faces()) {
    if (f.size() != 3) return {Answer::No, f};
  }
  return {Answer::Yes, std::nullopt};
}

Expression smallest_radius(const PeriodicPacking& p, int max_depth) {
  std::vector<std::string> used;
  for (const auto& d : p.discs()) {
    if (std::find(used.begin(), used.end(), d.radius) == used.end()) used.push_back(d.radius);
  }
  Expression best = p.radius_class(used.front()).value;
  for (std::size_t i = 1; i < used.size(); ++i) {
    Expression cand = p.radius_class(used[i]).value;
    auto v = exactnum::certify_compare(cand - best, 0, Direction::Below, p.bindings(), max_depth);
    if (v.status == Status::Proved) best = cand;
  }
  return best;
}

namespace {

struct Circle {
  double x = 0, y = 0, r = 0;
};

double mid(const Interval& iv) { return exactnum::to_double(iv.midpoint()); }

Circle coarse_circle(const PeriodicPacking& p, const exactnum::Environment& env, int id,
                     packing::Offset off) {
  const long bits = 80;
  return {mid(exactnum::evaluate(p.center_x(id, off), env, bits)),
          mid(exactnum::evaluate(p.center_y(id, off), env, bits)),
          mid(exactnum::evaluate(p.radius(id), env, bits))};
}

// Circles externally tangent to all three; Newton from the incenter-like
// starting point of the triangle of centers.
std::optional<Circle> apollonius(const Circle& a, const Circle& b, const Circle& c) {
  Circle z{(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3, 0};
  const Circle* cs[3] = {&a, &b, &c};
  double rr = std::numeric_limits<double>::infinity();
  for (auto* k : cs) rr = std::min(rr, std::hypot(z.x - k->x, z.y - k->y) - k->r);
  z.r = std::max(rr, 1e-6);
  for (int it = 0; it < 100; ++it) {
    double f[3], j[3][3];
    for (int i = 0; i < 3; ++i) {
      double dx = z.x - cs[i]->x, dy = z.y - cs[i]->y;
      double d = std::hypot(dx, dy);
      if (d == 0) return std::nullopt;
      f[i] = d - cs[i]->r - z.r;
      j[i][0] = dx / d;
      j[i][1] = dy / d;
      j[i][2] = -1;
    }
    double det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) -
                 j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
                 j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
    if (std::abs(det) < 1e-300) return std::nullopt;
    double step[3];
    for (int col = 0; col < 3; ++col) {
      double m[3][3];
      for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k) m[r][k] = k == col ? f[r] : j[r][k];
      step[col] = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])) /
                  det;
    }
    z.x -= step[0];
    z.y -= step[1];
    z.r -= step[2];
    if (std::abs(step[0]) + std::abs(step[1]) + std::abs(step[2]) < 1e-15) break;
  }
  if (!(z.r > 0) || !std::isfinite(z.r)) return std::nullopt;
  return z;
}

bool inside_polygon(const std::vector<Circle>& poly, double x, double y) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    if ((poly[i].y > y) != (poly[j].y > y) &&
        x < (poly[j].x - poly[i].x) * (y - poly[i].y) / (poly[j].y - poly[i].y) + poly[i].x) {
      in = !in;
    }
  }
  return in;
}

Rational to_rational(double v) { return Rational(v); }

const Rational kWitnessWidth = exactnum::power_of_two(-40);

// Tries to certify that a disc of radius `probe` centered at (cx, cy)
// overlaps no disc of the packing.
bool certify_probe(const PeriodicPacking& p, const Expression& probe, double cx, double cy,
                   double reach, const CertifyOptions& options) {
  const Rational x = to_rational(cx), y = to_rational(cy);
  auto near = packing::discs_near(p, Interval(x), Interval(y), to_rational(reach));
  for (const auto& c : near) {
    Expression dx = p.center_x(c.b, c.offset) - Expression(x);
    Expression dy = p.center_y(c.b, c.offset) - Expression(y);
    Expression clearance = dx * dx + dy * dy - exactnum::square(p.radius(c.b) + probe);
    auto v = exactnum::certify_compare(clearance, 0, Direction::Above, p.bindings(),
                                       options.max_depth);
    if (v.status != Status::Proved) return false;
  }
  return true;
}

}  // namespace

SaturationVerdict check_saturated(const PeriodicPacking& p, const ContactGraph& g,
                                  const Expression& probe, const CertifyOptions& options) {
  SaturationVerdict out;
  const auto env = p.bindings().environment(16);
  const double probe_hi = exactnum::to_double(exactnum::evaluate(probe, env, 80).hi());
  double r_max = 0;
  for (const auto& d : p.discs()) r_max = std::max(r_max, coarse_circle(p, env, d.id, {}).r);

  for (const auto& face : g.faces()) {
    if (face.size() == 3) {
      Expression inner = packing::descartes_inner_expression(
          p.radius(face.corners[0].disc), p.radius(face.corners[1].disc),
          p.radius(face.corners[2].disc));
      auto v = exactnum::certify_compare(inner - probe, 0, Direction::Above, p.bindings(),
                                         options.max_depth);
      if (v.status == Status::Proved) {
        auto enc = exactnum::eval(inner, p.bindings(), kWitnessWidth);
        out.saturated = Answer::No;
        out.witness = HoleWitness{face, "triangular hole", enc.value, std::nullopt};
        return out;
      }
      if (v.status == Status::Inconclusive) out.inconclusive_faces.push_back(face);
      continue;
    }

    std::vector<Circle> ring;
    for (const auto& c : face.corners) ring.push_back(coarse_circle(p, env, c.disc, c.offset));
    double cx = 0, cy = 0, spread = 0;
    for (const auto& c : ring) cx += c.x, cy += c.y;
    cx /= ring.size();
    cy /= ring.size();
    for (const auto& c : ring) spread = std::max(spread, std::hypot(c.x - cx, c.y - cy));
    std::vector<Circle> neighbours;
    const Rational cxq = to_rational(cx), cyq = to_rational(cy);
    for (const auto& c : packing::discs_near(p, Interval(cxq), Interval(cyq),
                                             to_rational(spread + 2 * r_max))) {
      neighbours.push_back(coarse_circle(p, env, c.b, c.offset));
    }

    std::optional<Circle> best;
    for (std::size_t i = 0; i < ring.size(); ++i)
      for (std::size_t j = i + 1; j < ring.size(); ++j)
        for (std::size_t k = j + 1; k < ring.size(); ++k) {
          auto z = apollonius(ring[i], ring[j], ring[k]);
          if (!z || !inside_polygon(ring, z->x, z->y)) continue;
          bool clear = true;
          for (const auto& n : neighbours) {
            if (std::hypot(z->x - n.x, z->y - n.y) < n.r + z->r - 1e-9) {
              clear = false;
              break;
            }
          }
          if (clear && (!best || z->r > best->r)) best = z;
        }

    const double margin = 1e-6;
    if (best && best->r * (1 - margin) - margin > probe_hi &&
        certify_probe(p, probe, best->x, best->y, probe_hi + r_max + 1, options)) {
      auto probe_enc = exactnum::eval(probe, p.bindings(), kWitnessWidth);
      out.saturated = Answer::No;
      out.witness = HoleWitness{face, std::to_string(face.size()) + "-sided hole",
                                probe_enc.value,
                                std::make_pair(Interval(to_rational(best->x)),
                                               Interval(to_rational(best->y)))};
      return out;
    }
    out.inconclusive_faces.push_back(face);
  }
  out.saturated = out.inconclusive_faces.empty() ? Answer::Yes : Answer::Inconclusive;
  return out;
}

DensityComparison compare_densities(const PeriodicPacking& first, const PeriodicPacking& second,
                                    int max_depth) {
  const Expression e1 = packing::density_expression(first);
  const Expression e2 = packing::density_expression(second);
  DensityComparison out;
  exactnum::RefineOptions opts;
  for (int depth : exactnum::depth_schedule(opts.start_depth, max_depth)) {
    const long bits = depth + opts.guard_bits;
    try {
      out.first = exactnum::evaluate(e1, first.bindings().environment(depth), bits);
      out.second = exactnum::evaluate(e2, second.bindings().environment(depth), bits);
    } catch (const exactnum::EvalError& err) {
      if (!err.retryable()) throw;
      continue;
    }
    out.depth = depth;
    if (out.first.lo() > out.second.hi()) {
      out.order = Order::FirstDenser;
      return out;
    }
    if (out.second.lo() > out.first.hi()) {
      out.order = Order::SecondDenser;
      return out;
    }
  }
  return out;
}

}  // namespace packcert::verifier
