#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "packcert/exactnum/expression.hpp"
#include "packcert/exactnum/interval.hpp"
#include "packcert/exactnum/roots.hpp"

namespace packcert::exactnum {

using Environment = std::map<std::string, Interval, std::less<>>;

class EvalError : public std::runtime_error {
 public:
  enum class Kind {
    UnboundVariable,
    NegativeRadicand,
    RadicandSign,
    DivisionByZero,
    AcosDomain,
  };
  EvalError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }
  /// Whether tighter input enclosures could make the error go away.
  bool retryable() const {
    return kind_ == Kind::RadicandSign || kind_ == Kind::DivisionByZero;
  }

 private:
  Kind kind_;
};

/// Single interval pass with outward rounding to 2^-bits after every node.
Interval evaluate(const Expression& e, const Environment& env, long bits);

/// Exact value of a sqrt/pi/acos-free expression at rational inputs.
/// Throws EvalError for unbound names, division by zero or irrational nodes.
Rational evaluate_exact(const Expression& e,
                        const std::map<std::string, Rational, std::less<>>& values);

/// Named algebraic numbers together with a thread-safe memo of their
/// refinements. Copies share the memo.
class Bindings {
 public:
  Bindings();

  /// Returns a copy with `value` bound under `name`.
  Bindings with(const std::string& name, const AlgebraicNumber& value) const;

  const AlgebraicNumber* find(std::string_view name) const;
  std::vector<std::string> names() const;
  bool empty() const;

  /// Interval for every binding refined to width <= 2^-depth.
  Environment environment(int depth) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

inline constexpr int kDefaultMaxDepth = 256;

struct RefineOptions {
  int max_depth = kDefaultMaxDepth;
  int start_depth = 8;
  long guard_bits = 32;
};

/// Depths tried in order: start, 2*start, ... capped at and ending with max.
std::vector<int> depth_schedule(int start_depth, int max_depth);

struct Enclosure {
  Interval value;
  int depth = 0;
  bool width_reached = false;
};

/// Refines bindings until the enclosure width is <= width or max depth is
/// spent; in the latter case the best enclosure is returned with
/// width_reached == false. EvalError escapes only when it cannot be resolved.
Enclosure eval(const Expression& e, const Bindings& bindings, const Rational& width,
               const RefineOptions& options = {});

enum class Direction { Above, Below };
enum class Status { Proved, Disproved, Inconclusive };

struct Verdict {
  Status status = Status::Inconclusive;
  Interval enclosure;
  int depth = 0;
};

/// Decides e > threshold (Above) or e < threshold (Below). Proved or
/// Disproved only with a strict certified separation; otherwise
/// Inconclusive after max_depth.
Verdict certify_compare(const Expression& e, const Rational& threshold, Direction direction,
                        const Bindings& bindings, int max_depth = kDefaultMaxDepth);

const char* to_string(Status status);

}  // namespace packcert::exactnum
