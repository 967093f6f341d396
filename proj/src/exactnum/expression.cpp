#include "packcert/exactnum/expression.hpp"

#include <cassert>

namespace packcert::exactnum {

struct Expression::Node {
  Kind kind = Kind::Constant;
  Rational value;
  std::string name;
  Expression a;
  Expression b;

  // Leaf constructors avoid allocating child constants.
  explicit Node(const Rational& v) : kind(Kind::Constant), value(v), a(NodePtr()), b(NodePtr()) {}
  Node(Kind k, std::string n) : kind(k), name(std::move(n)), a(NodePtr()), b(NodePtr()) {}
  Node(Kind k, Expression x, Expression y)
      : kind(k), a(std::move(x)), b(std::move(y)) {}
};

namespace {

std::size_t arity_of(Expression::Kind kind) {
  switch (kind) {
    case Expression::Kind::Constant:
    case Expression::Kind::Variable:
    case Expression::Kind::Pi:
      return 0;
    case Expression::Kind::Negate:
    case Expression::Kind::Sqrt:
    case Expression::Kind::Acos:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

Expression::Expression() : node_(std::make_shared<const Node>(Rational(0))) {}
Expression::Expression(const Rational& value) : node_(std::make_shared<const Node>(value)) {}
Expression::Expression(long value) : node_(std::make_shared<const Node>(Rational(value))) {}

Expression Expression::variable(std::string name) {
  return Expression(std::make_shared<const Node>(Kind::Variable, std::move(name)));
}

Expression Expression::pi() { return Expression(std::make_shared<const Node>(Kind::Pi, "pi")); }

Expression Expression::make(Kind kind, Expression a, Expression b) {
  return Expression(std::make_shared<const Node>(kind, std::move(a), std::move(b)));
}

Expression::Kind Expression::kind() const { return node_->kind; }
const Rational& Expression::value() const {
  assert(kind() == Kind::Constant);
  return node_->value;
}
const std::string& Expression::name() const { return node_->name; }
std::size_t Expression::arity() const { return arity_of(node_->kind); }
const Expression& Expression::operand(std::size_t index) const {
  assert(index < arity());
  return index == 0 ? node_->a : node_->b;
}

Expression operator-(const Expression& a) { return Expression::make(Expression::Kind::Negate, a); }
Expression operator+(const Expression& a, const Expression& b) {
  return Expression::make(Expression::Kind::Add, a, b);
}
Expression operator-(const Expression& a, const Expression& b) {
  return Expression::make(Expression::Kind::Subtract, a, b);
}
Expression operator*(const Expression& a, const Expression& b) {
  return Expression::make(Expression::Kind::Multiply, a, b);
}
Expression operator/(const Expression& a, const Expression& b) {
  return Expression::make(Expression::Kind::Divide, a, b);
}
Expression sqrt(const Expression& a) { return Expression::make(Expression::Kind::Sqrt, a); }
Expression acos(const Expression& a) { return Expression::make(Expression::Kind::Acos, a); }

bool operator==(const Expression& x, const Expression& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Expression::Kind::Constant:
      return x.value() == y.value();
    case Expression::Kind::Variable:
      return x.name() == y.name();
    case Expression::Kind::Pi:
      return true;
    default:
      break;
  }
  for (std::size_t i = 0; i < x.arity(); ++i) {
    if (!(x.operand(i) == y.operand(i))) return false;
  }
  return true;
}

Expression Expression::substitute(
    const std::map<std::string, Expression, std::less<>>& replacements) const {
  switch (kind()) {
    case Kind::Constant:
    case Kind::Pi:
      return *this;
    case Kind::Variable: {
      auto it = replacements.find(name());
      return it == replacements.end() ? *this : it->second;
    }
    default:
      break;
  }
  Expression a = operand(0).substitute(replacements);
  Expression b = arity() == 2 ? operand(1).substitute(replacements) : Expression(NodePtr());
  if (a.node_ == operand(0).node_ && (arity() == 1 || b.node_ == operand(1).node_)) return *this;
  return make(kind(), std::move(a), std::move(b));
}

std::set<std::string> Expression::variables() const {
  std::set<std::string> out;
  if (kind() == Kind::Variable) out.insert(name());
  for (std::size_t i = 0; i < arity(); ++i) out.merge(operand(i).variables());
  return out;
}

std::size_t Expression::node_count() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity(); ++i) n += operand(i).node_count();
  return n;
}

namespace {

constexpr int kAtom = 4;

int precedence(const Expression& e) {
  switch (e.kind()) {
    case Expression::Kind::Add:
    case Expression::Kind::Subtract:
      return 1;
    case Expression::Kind::Multiply:
    case Expression::Kind::Divide:
      return 2;
    case Expression::Kind::Negate:
      return 3;
    case Expression::Kind::Constant:
      // Negative and fractional literals re-parse as folded constants only
      // when they stand alone, so they are parenthesized whenever nested.
      return e.value() >= 0 && e.value().get_den() == 1 ? kAtom : 0;
    default:
      return kAtom;
  }
}

std::string print(const Expression& e, int required) {
  std::string text;
  switch (e.kind()) {
    case Expression::Kind::Constant:
      text = to_string(e.value());
      break;
    case Expression::Kind::Variable:
      text = e.name();
      break;
    case Expression::Kind::Pi:
      text = "pi";
      break;
    case Expression::Kind::Negate:
      text = e.operand(0).is_constant() ? "-(" + print(e.operand(0), 0) + ")"
                                        : "-" + print(e.operand(0), 3);
      break;
    case Expression::Kind::Sqrt:
      text = "sqrt(" + print(e.operand(0), 0) + ")";
      break;
    case Expression::Kind::Acos:
      text = "acos(" + print(e.operand(0), 0) + ")";
      break;
    default: {
      const int own = precedence(e);
      char op = '+';
      if (e.kind() == Expression::Kind::Subtract) op = '-';
      if (e.kind() == Expression::Kind::Multiply) op = '*';
      if (e.kind() == Expression::Kind::Divide) op = '/';
      std::string left = print(e.operand(0), own);
      // A literal over a literal would fold on re-parse.
      if (op == '/' && e.operand(0).is_constant() && e.operand(1).is_constant() &&
          left.front() != '(') left = "(" + left + ")";
      text = left + op + print(e.operand(1), own + 1);
      break;
    }
  }
  if (precedence(e) < required) return "(" + text + ")";
  return text;
}

}  // namespace

std::string Expression::to_string() const { return print(*this, 0); }

}  // namespace packcert::exactnum
