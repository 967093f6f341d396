#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "packcert/exactnum/rational.hpp"

namespace packcert::exactnum {

/// Immutable arithmetic tree over rationals, named variables, pi, square
/// roots and arccosines. Copies share structure.
class Expression {
 public:
  enum class Kind {
    Constant,
    Variable,
    Pi,
    Negate,
    Add,
    Subtract,
    Multiply,
    Divide,
    Sqrt,
    Acos,
  };

  /// The constant 0.
  Expression();
  Expression(const Rational& value);  // NOLINT(google-explicit-constructor)
  Expression(long value);             // NOLINT(google-explicit-constructor)

  static Expression constant(const Rational& value) { return Expression(value); }
  static Expression variable(std::string name);
  static Expression pi();

  Kind kind() const;
  /// Constant value; only valid for Kind::Constant.
  const Rational& value() const;
  /// Variable name; only valid for Kind::Variable.
  const std::string& name() const;
  std::size_t arity() const;
  const Expression& operand(std::size_t index) const;

  bool is_constant() const { return kind() == Kind::Constant; }

  Expression substitute(const std::map<std::string, Expression, std::less<>>& replacements) const;
  std::set<std::string> variables() const;
  std::size_t node_count() const;

  /// Parseable text with no whitespace.
  std::string to_string() const;

  /// Structural (not mathematical) equality.
  friend bool operator==(const Expression& a, const Expression& b);

  friend Expression operator-(const Expression& a);
  friend Expression operator+(const Expression& a, const Expression& b);
  friend Expression operator-(const Expression& a, const Expression& b);
  friend Expression operator*(const Expression& a, const Expression& b);
  friend Expression operator/(const Expression& a, const Expression& b);
  friend Expression sqrt(const Expression& a);
  friend Expression acos(const Expression& a);

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  explicit Expression(NodePtr node) : node_(std::move(node)) {}
  static Expression make(Kind kind, Expression a, Expression b = {});

  NodePtr node_;
};

Expression sqrt(const Expression& a);
Expression acos(const Expression& a);
inline Expression square(const Expression& a) { return a * a; }

class ExpressionSyntaxError : public std::invalid_argument {
 public:
  ExpressionSyntaxError(const std::string& message, std::size_t offset)
      : std::invalid_argument(message), offset_(offset) {}
  /// Zero-based character offset of the problem within the parsed text.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar: rational literals, identifiers, `pi`, `+ - * /`, unary minus,
/// `sqrt(...)`, `acos(...)` and parentheses. A literal divided by a literal
/// and a negated literal fold into a single constant.
Expression parse_expression(std::string_view text);

}  // namespace packcert::exactnum
