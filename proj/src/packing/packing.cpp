#include "packcert/packing/packing.hpp"

#include <algorithm>
#include <set>

namespace packcert::packing {

using exactnum::Direction;
using exactnum::Integer;
using exactnum::EvalError;
using exactnum::Status;

Contact Contact::normalized() const {
  if (a > b) return reversed();
  if (a == b && offset < Offset{0, 0}) return reversed();
  return *this;
}

namespace {

Expression scaled_term(int k, const Expression& e) {
  if (k == 1) return e;
  if (k == -1) return -e;
  return Expression(static_cast<long>(k)) * e;
}

Expression combine(int m, const Expression& u, int n, const Expression& v) {
  if (m == 0 && n == 0) return Expression(0L);
  if (m == 0) return scaled_term(n, v);
  if (n == 0) return scaled_term(m, u);
  return scaled_term(m, u) + scaled_term(n, v);
}

Expression plus(const Expression& base, const Expression& shift) {
  if (shift.is_constant() && shift.value() == 0) return base;
  return base + shift;
}

Integer ceil_to_integer(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

const Rational kCoarseWidth = exactnum::power_of_two(-24);

Interval coarse(const Expression& e, const Bindings& b) {
  return exactnum::eval(e, b, kCoarseWidth).value;
}

Rational norm_upper(const Interval& x, const Interval& y) {
  return exactnum::sqrt(exactnum::square(x) + exactnum::square(y), 40).hi();
}

// Interval picture of the packing, good enough to bound pair searches.
struct CoarseGeometry {
  std::vector<Interval> cx, cy, r;
  Interval t1x, t1y, t2x, t2y;
  Rational t1_norm, t2_norm, det_abs_lo;

  explicit CoarseGeometry(const PeriodicPacking& p) {
    const auto& b = p.bindings();
    for (const auto& d : p.discs()) {
      cx.push_back(coarse(d.x, b));
      cy.push_back(coarse(d.y, b));
      r.push_back(coarse(p.radius(d.id), b));
    }
    const auto& l = p.lattice();
    t1x = coarse(l.t1x, b);
    t1y = coarse(l.t1y, b);
    t2x = coarse(l.t2x, b);
    t2y = coarse(l.t2y, b);
    t1_norm = norm_upper(t1x, t1y);
    t2_norm = norm_upper(t2x, t2y);
    Interval det = t1x * t2y - t1y * t2x;
    if (det.contains_zero()) throw PackingError("degenerate lattice");
    det_abs_lo = det.lo() > 0 ? det.lo() : Rational(-det.hi());
  }

  Interval vx(Offset o) const { return Interval(Rational(o.m)) * t1x + Interval(Rational(o.n)) * t2x; }
  Interval vy(Offset o) const { return Interval(Rational(o.m)) * t1y + Interval(Rational(o.n)) * t2y; }

  // Offsets whose translation vector may have length <= radius.
  std::vector<Offset> offsets_within(const Rational& radius) const {
    const long mb = ceil_to_integer(radius * t2_norm / det_abs_lo).get_si();
    const long nb = ceil_to_integer(radius * t1_norm / det_abs_lo).get_si();
    const Rational r2 = radius * radius;
    std::vector<Offset> out;
    for (long m = -mb; m <= mb; ++m) {
      for (long n = -nb; n <= nb; ++n) {
        Offset o{static_cast<int>(m), static_cast<int>(n)};
        Interval len2 = exactnum::square(vx(o)) + exactnum::square(vy(o));
        if (len2.lo() > r2) continue;
        out.push_back(o);
      }
    }
    return out;
  }
};

}  // namespace

PeriodicPacking::PeriodicPacking(Lattice lattice, std::vector<RadiusClass> radii,
                                 std::vector<Disc> discs, Bindings bindings,
                                 std::vector<Contact> declared_contacts, int max_depth)
    : lattice_(std::move(lattice)),
      radii_(std::move(radii)),
      discs_(std::move(discs)),
      bindings_(std::move(bindings)),
      max_depth_(max_depth) {
  std::set<std::string> class_names;
  for (const auto& rc : radii_) {
    if (!class_names.insert(rc.name).second) {
      throw PackingError("duplicate radius class '" + rc.name + "'");
    }
  }
  std::set<int> ids;
  for (const auto& d : discs_) {
    if (!ids.insert(d.id).second) throw PackingError("duplicate disc id " + std::to_string(d.id));
    if (!class_names.count(d.radius)) {
      throw PackingError("disc " + std::to_string(d.id) + " uses unknown radius class '" +
                         d.radius + "'");
    }
  }
  std::set<Contact> seen;
  for (const auto& c : declared_contacts) {
    if (!ids.count(c.a) || !ids.count(c.b)) {
      throw PackingError("contact references unknown disc " +
                         std::to_string(ids.count(c.a) ? c.b : c.a));
    }
    if (c.a == c.b && c.offset.is_zero()) {
      throw PackingError("contact of disc " + std::to_string(c.a) + " with itself");
    }
    if (seen.insert(c.normalized()).second) contacts_.push_back(c.normalized());
  }

  try {
    for (const auto& rc : radii_) {
      auto v = exactnum::certify_compare(rc.value, 0, Direction::Above, bindings_, max_depth_);
      if (v.status != Status::Proved) {
        throw PackingError("radius class '" + rc.name + "' is not certified positive");
      }
    }
    Expression det = lattice_.t1x * lattice_.t2y - lattice_.t1y * lattice_.t2x;
    auto v = exactnum::certify_compare(det, 0, Direction::Above, bindings_, max_depth_);
    if (v.status == Status::Inconclusive) throw PackingError("degenerate lattice");
    orientation_ = v.status == Status::Proved ? 1 : -1;
    for (const auto& d : discs_) {
      coarse(d.x, bindings_);
      coarse(d.y, bindings_);
    }
  } catch (const EvalError& err) {
    throw PackingError(std::string("cannot evaluate packing: ") + err.what());
  }
}

bool PeriodicPacking::has_disc(int id) const {
  return std::any_of(discs_.begin(), discs_.end(), [&](const Disc& d) { return d.id == id; });
}

std::size_t PeriodicPacking::index_of(int id) const {
  for (std::size_t i = 0; i < discs_.size(); ++i) {
    if (discs_[i].id == id) return i;
  }
  throw PackingError("unknown disc " + std::to_string(id));
}

const Disc& PeriodicPacking::disc(int id) const { return discs_[index_of(id)]; }

const RadiusClass& PeriodicPacking::radius_class(std::string_view name) const {
  for (const auto& rc : radii_) {
    if (rc.name == name) return rc;
  }
  throw PackingError("unknown radius class '" + std::string(name) + "'");
}

bool PeriodicPacking::is_declared_contact(const Contact& c) const {
  Contact n = c.normalized();
  return std::find(contacts_.begin(), contacts_.end(), n) != contacts_.end();
}

Expression PeriodicPacking::radius(int id) const { return radius_class(disc(id).radius).value; }

Expression PeriodicPacking::translation_x(Offset o) const {
  return combine(o.m, lattice_.t1x, o.n, lattice_.t2x);
}

Expression PeriodicPacking::translation_y(Offset o) const {
  return combine(o.m, lattice_.t1y, o.n, lattice_.t2y);
}

Expression PeriodicPacking::center_x(int id, Offset o) const {
  return plus(disc(id).x, translation_x(o));
}

Expression PeriodicPacking::center_y(int id, Offset o) const {
  return plus(disc(id).y, translation_y(o));
}

PeriodicPacking PeriodicPacking::with_additions(std::vector<Disc> discs,
                                                std::vector<Contact> contacts) const {
  std::vector<Disc> all = discs_;
  all.insert(all.end(), std::make_move_iterator(discs.begin()), std::make_move_iterator(discs.end()));
  std::vector<Contact> all_contacts = contacts_;
  all_contacts.insert(all_contacts.end(), contacts.begin(), contacts.end());
  return PeriodicPacking(lattice_, radii_, std::move(all), bindings_, std::move(all_contacts),
                         max_depth_);
}

PeriodicPacking PeriodicPacking::scaled(const Rational& factor) const {
  const Expression f(factor);
  Lattice l{f * lattice_.t1x, f * lattice_.t1y, f * lattice_.t2x, f * lattice_.t2y};
  std::vector<RadiusClass> radii;
  for (const auto& rc : radii_) radii.push_back({rc.name, f * rc.value});
  std::vector<Disc> discs;
  for (const auto& d : discs_) discs.push_back({d.id, f * d.x, f * d.y, d.radius});
  return PeriodicPacking(std::move(l), std::move(radii), std::move(discs), bindings_, contacts_,
                         max_depth_);
}

std::vector<PairCandidate> enumerate_pairs(const PeriodicPacking& p) {
  CoarseGeometry g(p);
  const auto& discs = p.discs();
  Rational diameter = 0;
  Rational r_max = 0;
  for (std::size_t i = 0; i < discs.size(); ++i) {
    r_max = std::max(r_max, g.r[i].hi());
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      diameter = std::max(diameter, norm_upper(g.cx[j] - g.cx[i], g.cy[j] - g.cy[i]));
    }
  }
  const Rational cutoff = diameter + 2 * r_max;
  const auto offsets = g.offsets_within(cutoff);
  std::vector<PairCandidate> out;
  for (std::size_t i = 0; i < discs.size(); ++i) {
    for (std::size_t j = i; j < discs.size(); ++j) {
      for (Offset o : offsets) {
        if (i == j && !(o > Offset{0, 0})) continue;
        out.push_back({discs[i].id, discs[j].id, o});
      }
    }
  }
  return out;
}

std::vector<PairCandidate> discs_near(const PeriodicPacking& p, const Interval& x,
                                      const Interval& y, const Rational& radius) {
  CoarseGeometry g(p);
  const auto& discs = p.discs();
  Rational reach = 0;
  for (std::size_t i = 0; i < discs.size(); ++i) {
    reach = std::max(reach, norm_upper(g.cx[i] - x, g.cy[i] - y));
  }
  const auto offsets = g.offsets_within(reach + radius);
  const Rational r2 = radius * radius;
  std::vector<PairCandidate> out;
  for (std::size_t i = 0; i < discs.size(); ++i) {
    for (Offset o : offsets) {
      Interval dx = g.cx[i] + g.vx(o) - x;
      Interval dy = g.cy[i] + g.vy(o) - y;
      if ((exactnum::square(dx) + exactnum::square(dy)).lo() > r2) continue;
      out.push_back({-1, discs[i].id, o});
    }
  }
  return out;
}

namespace {

void require_distinct(int a, int b, Offset offset) {
  if (a == b && offset.is_zero()) throw PackingError("self gap");
}

}  // namespace

Expression gap_expression(const PeriodicPacking& p, int a, int b, Offset offset) {
  require_distinct(a, b, offset);
  Expression dx = p.center_x(b, offset) - p.center_x(a);
  Expression dy = p.center_y(b, offset) - p.center_y(a);
  return sqrt(square(dx) + square(dy)) - (p.radius(a) + p.radius(b));
}

Expression squared_gap_expression(const PeriodicPacking& p, int a, int b, Offset offset) {
  require_distinct(a, b, offset);
  Expression dx = p.center_x(b, offset) - p.center_x(a);
  Expression dy = p.center_y(b, offset) - p.center_y(a);
  return square(dx) + square(dy) - square(p.radius(a) + p.radius(b));
}

Interval gap(const PeriodicPacking& p, int a, int b, Offset offset, const Rational& width,
             int max_depth) {
  exactnum::RefineOptions options;
  options.max_depth = max_depth;
  return exactnum::eval(gap_expression(p, a, b, offset), p.bindings(), width, options).value;
}

OverlapReport check_no_overlap(const PeriodicPacking& p, const CertifyOptions& options) {
  OverlapReport report;
  exactnum::RefineOptions refine;
  refine.max_depth = options.max_depth;

  for (const auto& c : p.declared_contacts()) {
    PairCandidate pair{c.a, c.b, c.offset};
    auto enc = exactnum::eval(gap_expression(p, c.a, c.b, c.offset), p.bindings(),
                              options.tolerance, refine);
    ++report.pairs_checked;
    if (enc.value.certainly_positive()) {
      report.violations.push_back({pair, enc.value, "declared contact is not tangent"});
    } else if (enc.value.certainly_negative()) {
      report.violations.push_back({pair, enc.value, "overlap"});
    } else if (!enc.width_reached) {
      report.inconclusive.push_back({pair, enc.value, "tangency not resolved within tolerance"});
    }
  }

  for (const auto& pair : enumerate_pairs(p)) {
    if (p.is_declared_contact({pair.a, pair.b, pair.offset})) continue;
    ++report.pairs_checked;
    auto v = exactnum::certify_compare(squared_gap_expression(p, pair.a, pair.b, pair.offset), 0,
                                       Direction::Above, p.bindings(), options.max_depth);
    if (v.status == Status::Proved) continue;
    Interval g = gap(p, pair.a, pair.b, pair.offset, options.tolerance, options.max_depth);
    if (v.status == Status::Disproved) {
      report.violations.push_back({pair, g, "overlap"});
    } else {
      report.inconclusive.push_back({pair, g, "gap sign unresolved (undeclared tangency?)"});
    }
  }
  report.pass = report.violations.empty() && report.inconclusive.empty();
  return report;
}

Expression disc_area_expression(const PeriodicPacking& p) {
  Expression sum;
  bool first = true;
  for (const auto& d : p.discs()) {
    Expression r2 = square(p.radius(d.id));
    sum = first ? r2 : sum + r2;
    first = false;
  }
  return Expression::pi() * sum;
}

Expression cell_area_expression(const PeriodicPacking& p) {
  const auto& l = p.lattice();
  Expression det = l.t1x * l.t2y - l.t1y * l.t2x;
  return p.orientation() > 0 ? det : -det;
}

Expression density_expression(const PeriodicPacking& p) {
  return disc_area_expression(p) / cell_area_expression(p);
}

Expression class_density_expression(const PeriodicPacking& p, std::string_view radius_class) {
  const Expression r = p.radius_class(radius_class).value;
  long count = 0;
  for (const auto& d : p.discs()) count += d.radius == radius_class ? 1 : 0;
  return Expression(count) * Expression::pi() * square(r) / cell_area_expression(p);
}

DensityReport density(const PeriodicPacking& p, const Rational& width, int max_depth) {
  exactnum::RefineOptions options;
  options.max_depth = max_depth;
  const auto& b = p.bindings();
  return DensityReport{
      exactnum::eval(density_expression(p), b, width, options).value,
      exactnum::eval(disc_area_expression(p), b, width, options).value,
      exactnum::eval(cell_area_expression(p), b, width, options).value,
  };
}

}  // namespace packcert::packing
