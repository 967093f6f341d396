#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "packcert/exactnum/polynomial.hpp"
#include "packcert/packing/packing.hpp"
#include "packcert/packing/tangency.hpp"

namespace packcert::shell {

using exactnum::Expression;
using exactnum::IntegerPolynomial;
using exactnum::Rational;
using packing::Contact;
using packing::PeriodicPacking;
using packing::SolveRule;

class SceneError : public std::runtime_error {
 public:
  SceneError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  /// Message without the location prefix.
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

enum class RadiusKind { Root, Rational, Expr };

struct RadiusDecl {
  std::string name;
  RadiusKind kind = RadiusKind::Rational;
  IntegerPolynomial poly;  // Root
  Rational lo, hi;         // Root
  Rational value;          // Rational
  Expression expr;         // Expr
  int line = 0;
};

struct DefineDecl {
  std::string name;
  Expression expr;
  int line = 0;
};

struct DiscDecl {
  int id = 0;
  Expression x, y;
  std::string radius;
  int line = 0;
};

struct ContactDecl {
  Contact contact;
  int line = 0;
};

struct SolveDecl {
  SolveRule rule;
  int line = 0;
};

/// Parsed scene file. Expressions are kept as written; names are resolved
/// when the packing is built.
struct Scene {
  std::string name;
  std::string description;
  std::string reference;
  std::vector<RadiusDecl> radii;
  std::vector<DefineDecl> defines;
  std::optional<std::array<Expression, 4>> lattice;  // t1x t1y t2x t2y
  std::vector<DiscDecl> discs;
  std::vector<ContactDecl> contacts;
  std::vector<SolveDecl> solves;
  std::optional<Rational> tolerance;
};

/// Line-oriented grammar, `#` starts a comment. Expressions must not contain
/// whitespace outside parentheses. Throws SceneError with the location of
/// unknown identifiers, malformed expressions, duplicate ids and a missing
/// lattice.
Scene parse_scene(std::string_view text);
Scene load_scene(const std::string& path);

std::string serialize_scene(const Scene& scene);

/// Equality ignoring source line numbers.
bool same_structure(const Scene& a, const Scene& b);

struct BuiltScene {
  PeriodicPacking packing;
  /// Every radius and define, rewritten over the root-radius variables.
  std::map<std::string, Expression, std::less<>> names;
  packing::CertifyOptions options;
};

/// Isolates root radii (each bracket must hold exactly one root), resolves
/// names, validates the packing and applies solve rules in order.
BuiltScene build_scene(const Scene& scene, int max_depth = exactnum::kDefaultMaxDepth);

/// Parses `text` as an expression over the scene's names.
Expression resolve_expression(const BuiltScene& scene, std::string_view text);

}  // namespace packcert::shell
