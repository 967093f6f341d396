#include "packcert/exactnum/evaluate.hpp"

#include <mutex>
#include <utility>

#include "packcert/exactnum/transcendental.hpp"

namespace packcert::exactnum {
namespace {

Interval eval_node(const Expression& e, const Environment& env, long bits) {
  using Kind = Expression::Kind;
  switch (e.kind()) {
    case Kind::Constant:
      return round_outward(Interval(e.value()), bits);
    case Kind::Variable: {
      auto it = env.find(e.name());
      if (it == env.end()) {
        throw EvalError(EvalError::Kind::UnboundVariable, "unbound variable '" + e.name() + "'");
      }
      return round_outward(it->second, bits);
    }
    case Kind::Pi:
      return pi_enclosure(bits);
    case Kind::Negate:
      return -eval_node(e.operand(0), env, bits);
    case Kind::Add:
      return round_outward(eval_node(e.operand(0), env, bits) + eval_node(e.operand(1), env, bits),
                           bits);
    case Kind::Subtract:
      return round_outward(eval_node(e.operand(0), env, bits) - eval_node(e.operand(1), env, bits),
                           bits);
    case Kind::Multiply: {
      // x*x is the common case of a square; keep it nonnegative.
      if (e.operand(0) == e.operand(1)) return round_outward(square(eval_node(e.operand(0), env, bits)), bits);
      return round_outward(eval_node(e.operand(0), env, bits) * eval_node(e.operand(1), env, bits),
                           bits);
    }
    case Kind::Divide: {
      Interval num = eval_node(e.operand(0), env, bits);
      Interval den = eval_node(e.operand(1), env, bits);
      if (den.contains_zero()) {
        throw EvalError(EvalError::Kind::DivisionByZero, "possible division by zero");
      }
      return round_outward(num / den, bits);
    }
    case Kind::Sqrt: {
      Interval arg = eval_node(e.operand(0), env, bits);
      if (arg.certainly_negative()) {
        throw EvalError(EvalError::Kind::NegativeRadicand, "negative radicand");
      }
      if (arg.lo() < 0) {
        throw EvalError(EvalError::Kind::RadicandSign, "radicand sign unresolved");
      }
      return sqrt(arg, bits);
    }
    case Kind::Acos: {
      Interval arg = eval_node(e.operand(0), env, bits);
      if (arg.lo() > 1 || arg.hi() < -1) {
        throw EvalError(EvalError::Kind::AcosDomain, "acos argument outside [-1, 1]");
      }
      if (arg.lo() < -1 || arg.hi() > 1) {
        throw EvalError(EvalError::Kind::RadicandSign, "acos argument range unresolved");
      }
      return acos_enclosure(arg, bits);
    }
  }
  throw std::logic_error("unknown expression kind");
}

Rational exact_node(const Expression& e,
                    const std::map<std::string, Rational, std::less<>>& values) {
  using Kind = Expression::Kind;
  switch (e.kind()) {
    case Kind::Constant:
      return e.value();
    case Kind::Variable: {
      auto it = values.find(e.name());
      if (it == values.end()) {
        throw EvalError(EvalError::Kind::UnboundVariable, "unbound variable '" + e.name() + "'");
      }
      return it->second;
    }
    case Kind::Negate:
      return -exact_node(e.operand(0), values);
    case Kind::Add:
      return exact_node(e.operand(0), values) + exact_node(e.operand(1), values);
    case Kind::Subtract:
      return exact_node(e.operand(0), values) - exact_node(e.operand(1), values);
    case Kind::Multiply:
      return exact_node(e.operand(0), values) * exact_node(e.operand(1), values);
    case Kind::Divide: {
      Rational den = exact_node(e.operand(1), values);
      if (den == 0) throw EvalError(EvalError::Kind::DivisionByZero, "division by zero");
      return exact_node(e.operand(0), values) / den;
    }
    default:
      throw EvalError(EvalError::Kind::UnboundVariable,
                      "expression has no exact rational value: " + e.to_string());
  }
}

}  // namespace

Interval evaluate(const Expression& e, const Environment& env, long bits) {
  return eval_node(e, env, bits);
}

Rational evaluate_exact(const Expression& e,
                        const std::map<std::string, Rational, std::less<>>& values) {
  return exact_node(e, values);
}

struct Bindings::State {
  std::map<std::string, AlgebraicNumber, std::less<>> values;
  std::mutex mutex;
  // name -> depth -> refinement at width 2^-depth
  std::map<std::string, std::map<int, AlgebraicNumber>, std::less<>> memo;
};

Bindings::Bindings() : state_(std::make_shared<State>()) {}

Bindings Bindings::with(const std::string& name, const AlgebraicNumber& value) const {
  Bindings out;
  out.state_->values = state_->values;
  out.state_->values.insert_or_assign(name, value.renamed(name));
  return out;
}

const AlgebraicNumber* Bindings::find(std::string_view name) const {
  auto it = state_->values.find(name);
  return it == state_->values.end() ? nullptr : &it->second;
}

std::vector<std::string> Bindings::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : state_->values) out.push_back(name);
  return out;
}

bool Bindings::empty() const { return state_->values.empty(); }

Environment Bindings::environment(int depth) const {
  Environment env;
  std::lock_guard lock(state_->mutex);
  for (const auto& [name, value] : state_->values) {
    auto& per_depth = state_->memo[name];
    auto hit = per_depth.find(depth);
    if (hit == per_depth.end()) {
      // Continue bisecting from the deepest shallower refinement.
      const AlgebraicNumber* start = &value;
      auto below = per_depth.lower_bound(depth);
      if (below != per_depth.begin()) start = &std::prev(below)->second;
      hit = per_depth.emplace(depth, refine(*start, power_of_two(-depth))).first;
    }
    env.emplace(name, hit->second.isolating());
  }
  return env;
}

std::vector<int> depth_schedule(int start_depth, int max_depth) {
  std::vector<int> out;
  if (max_depth < 1) max_depth = 1;
  int d = start_depth < 1 ? 1 : start_depth;
  while (d < max_depth) {
    out.push_back(d);
    d *= 2;
  }
  out.push_back(max_depth);
  return out;
}

Enclosure eval(const Expression& e, const Bindings& bindings, const Rational& width,
               const RefineOptions& options) {
  const auto schedule = depth_schedule(options.start_depth, options.max_depth);
  Enclosure best;
  bool have_best = false;
  for (int depth : schedule) {
    Interval value;
    try {
      value = evaluate(e, bindings.environment(depth), depth + options.guard_bits);
    } catch (const EvalError& err) {
      if (!err.retryable() || depth == schedule.back()) throw;
      continue;
    }
    best = {value, depth, value.width() <= width};
    have_best = true;
    if (best.width_reached) return best;
  }
  if (!have_best) throw std::logic_error("empty refinement schedule");
  return best;
}

Verdict certify_compare(const Expression& e, const Rational& threshold, Direction direction,
                        const Bindings& bindings, int max_depth) {
  RefineOptions options;
  options.max_depth = max_depth;
  const auto schedule = depth_schedule(options.start_depth, max_depth);
  Verdict verdict;
  for (int depth : schedule) {
    Interval value;
    try {
      value = evaluate(e, bindings.environment(depth), depth + options.guard_bits);
    } catch (const EvalError& err) {
      if (!err.retryable() || depth == schedule.back()) throw;
      continue;
    }
    verdict.enclosure = value;
    verdict.depth = depth;
    const bool above = value.lo() > threshold;
    const bool below = value.hi() < threshold;
    if (above || below) {
      const bool claimed = direction == Direction::Above ? above : below;
      verdict.status = claimed ? Status::Proved : Status::Disproved;
      return verdict;
    }
  }
  verdict.status = Status::Inconclusive;
  return verdict;
}

const char* to_string(Status status) {
  switch (status) {
    case Status::Proved:
      return "Proved";
    case Status::Disproved:
      return "Disproved";
    case Status::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

}  // namespace packcert::exactnum
