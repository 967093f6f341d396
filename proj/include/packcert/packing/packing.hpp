#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "packcert/exactnum/evaluate.hpp"
#include "packcert/exactnum/expression.hpp"
#include "packcert/exactnum/interval.hpp"

namespace packcert::packing {

using exactnum::Bindings;
using exactnum::Expression;
using exactnum::Interval;
using exactnum::Rational;

/// Integer lattice coordinates (m, n) of the translate m*t1 + n*t2.
struct Offset {
  int m = 0;
  int n = 0;

  bool is_zero() const { return m == 0 && n == 0; }
  Offset operator-() const { return {-m, -n}; }
  friend Offset operator+(Offset a, Offset b) { return {a.m + b.m, a.n + b.n}; }
  friend auto operator<=>(const Offset&, const Offset&) = default;
};

struct RadiusClass {
  std::string name;
  Expression value;
};

struct Disc {
  int id = 0;
  Expression x;
  Expression y;
  std::string radius;  // RadiusClass name
};

struct Lattice {
  Expression t1x, t1y;
  Expression t2x, t2y;
};

/// Disc `a` at offset zero touches disc `b` translated by `offset`.
struct Contact {
  int a = 0;
  int b = 0;
  Offset offset;

  /// Same contact seen from the other side.
  Contact reversed() const { return {b, a, -offset}; }
  /// Canonical representative: a < b, or a == b with a positive offset.
  Contact normalized() const;
  friend auto operator<=>(const Contact&, const Contact&) = default;
};

struct CertifyOptions {
  int max_depth = exactnum::kDefaultMaxDepth;
  /// Width within which a tangency gap must enclose zero.
  Rational tolerance = Rational(1, 1000000000);
};

class PackingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lattice basis plus the discs of one fundamental domain, with the
/// algebraic numbers their coordinates refer to. Immutable.
class PeriodicPacking {
 public:
  /// Validates structure: unique ids, known radius classes, contacts that
  /// reference existing discs, radii certified positive and a lattice with
  /// certified nonzero determinant. Throws PackingError.
  PeriodicPacking(Lattice lattice, std::vector<RadiusClass> radii, std::vector<Disc> discs,
                  Bindings bindings, std::vector<Contact> declared_contacts = {},
                  int max_depth = exactnum::kDefaultMaxDepth);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<RadiusClass>& radius_classes() const { return radii_; }
  const std::vector<Disc>& discs() const { return discs_; }
  const Bindings& bindings() const { return bindings_; }
  const std::vector<Contact>& declared_contacts() const { return contacts_; }
  /// +1 or -1: orientation of (t1, t2).
  int orientation() const { return orientation_; }

  bool has_disc(int id) const;
  const Disc& disc(int id) const;
  std::size_t index_of(int id) const;
  const RadiusClass& radius_class(std::string_view name) const;
  bool is_declared_contact(const Contact& c) const;

  Expression radius(int id) const;
  Expression center_x(int id, Offset offset = {}) const;
  Expression center_y(int id, Offset offset = {}) const;
  Expression translation_x(Offset offset) const;
  Expression translation_y(Offset offset) const;

  /// Copy with extra discs and contacts; revalidated.
  PeriodicPacking with_additions(std::vector<Disc> discs, std::vector<Contact> contacts) const;
  /// Copy with every coordinate, radius and lattice entry scaled by `factor`.
  PeriodicPacking scaled(const Rational& factor) const;

 private:
  Lattice lattice_;
  std::vector<RadiusClass> radii_;
  std::vector<Disc> discs_;
  Bindings bindings_;
  std::vector<Contact> contacts_;
  int orientation_ = 1;
  int max_depth_ = exactnum::kDefaultMaxDepth;
};

/// A disc pair to examine: `a` at offset zero against `b` at `offset`.
struct PairCandidate {
  int a = 0;
  int b = 0;
  Offset offset;
};

/// Every pair that could possibly touch or overlap: all offsets with
/// |m*t1 + n*t2| <= D + 2*r_max (D the diameter of the center set), bounded
/// with interval arithmetic. Each unordered pair appears once.
std::vector<PairCandidate> enumerate_pairs(const PeriodicPacking& p);

/// Every offset whose translate of some disc center may lie within
/// `radius` of the point (x, y).
std::vector<PairCandidate> discs_near(const PeriodicPacking& p, const Interval& x,
                                      const Interval& y, const Rational& radius);

/// distance(center_a, center_b + offset) - (r_a + r_b).
/// Throws PackingError("self gap") for a == b with zero offset.
Expression gap_expression(const PeriodicPacking& p, int a, int b, Offset offset);
/// d^2 - (r_a + r_b)^2; same sign as the gap without a top-level root.
Expression squared_gap_expression(const PeriodicPacking& p, int a, int b, Offset offset);

Interval gap(const PeriodicPacking& p, int a, int b, Offset offset, const Rational& width,
             int max_depth = exactnum::kDefaultMaxDepth);

struct PairIssue {
  PairCandidate pair;
  Interval gap;
  std::string reason;
};

struct OverlapReport {
  bool pass = false;
  std::vector<PairIssue> violations;
  std::vector<PairIssue> inconclusive;
  std::size_t pairs_checked = 0;
};

/// Every candidate pair must have a certified nonnegative gap; declared
/// contacts must instead enclose zero within the tolerance.
OverlapReport check_no_overlap(const PeriodicPacking& p, const CertifyOptions& options = {});

struct DensityReport {
  Interval density;
  Interval disc_area;
  Interval cell_area;
};

Expression disc_area_expression(const PeriodicPacking& p);
/// |det(t1, t2)| using the certified orientation.
Expression cell_area_expression(const PeriodicPacking& p);
Expression density_expression(const PeriodicPacking& p);
/// Density contributed by the discs of one radius class.
Expression class_density_expression(const PeriodicPacking& p, std::string_view radius_class);

DensityReport density(const PeriodicPacking& p, const Rational& width,
                      int max_depth = exactnum::kDefaultMaxDepth);

}  // namespace packcert::packing
