#include <cctype>

#include "packcert/exactnum/expression.hpp"

namespace packcert::exactnum {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression e = expression().value;
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  // `literal` marks a bare number (possibly folded) eligible for folding.
  struct Parsed {
    Expression value;
    bool literal = false;
  };

  [[noreturn]] void fail(const std::string& message) const {
    throw ExpressionSyntaxError("malformed expression: " + message, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Parsed expression() {
    Parsed left = term();
    for (;;) {
      if (accept('+')) {
        left = {left.value + term().value, false};
      } else if (accept('-')) {
        left = {left.value - term().value, false};
      } else {
        return left;
      }
    }
  }

  Parsed term() {
    Parsed left = unary();
    for (;;) {
      if (accept('*')) {
        left = {left.value * unary().value, false};
      } else if (accept('/')) {
        std::size_t at = pos_;
        Parsed right = unary();
        if (left.literal && right.literal) {
          if (right.value.value() == 0) {
            pos_ = at;
            fail("division by literal zero");
          }
          left = {Expression(left.value.value() / right.value.value()), true};
        } else {
          left = {left.value / right.value, false};
        }
      } else {
        return left;
      }
    }
  }

  Parsed unary() {
    if (accept('-')) {
      Parsed operand = unary();
      if (operand.literal) return {Expression(-operand.value.value()), true};
      return {-operand.value, false};
    }
    if (accept('+')) return unary();
    return primary();
  }

  Parsed primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expression inner = expression().value;
      if (!accept(')')) fail("expected ')'");
      return {inner, false};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return {number(), true};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "pi") return {Expression::pi(), false};
      if (name == "sqrt" || name == "acos") {
        if (!accept('(')) fail("expected '(' after " + name);
        Expression inner = expression().value;
        if (!accept(')')) fail("expected ')'");
        return {name == "sqrt" ? sqrt(inner) : acos(inner), false};
      }
      return {Expression::variable(std::move(name)), false};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expression number() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits();
      } else {
        pos_ = save;
      }
    }
    try {
      return Expression(parse_rational(text_.substr(start, pos_ - start)));
    } catch (const std::invalid_argument&) {
      pos_ = start;
      fail("bad number");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace packcert::exactnum
