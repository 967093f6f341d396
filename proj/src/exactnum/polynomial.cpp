#include "packcert/exactnum/polynomial.hpp"

#include <sstream>
#include <utility>

#include "poly_detail.hpp"

namespace packcert::exactnum {

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> coeffs, int degree_cap)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (degree() > degree_cap) {
    throw std::invalid_argument("polynomial degree " + std::to_string(degree()) +
                                " exceeds cap " + std::to_string(degree_cap));
  }
}

IntegerPolynomial IntegerPolynomial::parse(std::string_view text, int degree_cap) {
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::string token(item);
    if (!token.empty() && token.front() == '+') token.erase(0, 1);
    Integer value;
    if (token.empty() || value.set_str(token, 10) != 0) {
      throw std::invalid_argument("malformed polynomial coefficient '" + std::string(item) +
                                  "'");
    }
    coeffs.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntegerPolynomial(std::move(coeffs), degree_cap);
}

Rational IntegerPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int IntegerPolynomial::sign_at(const Rational& x) const {
  // Homogenized Horner in integers: sum c_i n^i d^(deg-i), d > 0.
  if (coeffs_.empty()) return 0;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = 0;
  Integer dpow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * n + *it * dpow;
    dpow *= d;
  }
  return sgn(acc);
}

IntegerPolynomial IntegerPolynomial::derivative() const {
  std::vector<Integer> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Integer(i));
  return IntegerPolynomial(std::move(out));
}

std::string IntegerPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i].get_str();
  }
  return os.str();
}

IntegerPolynomial square_free_part(const IntegerPolynomial& p) {
  if (p.is_zero()) throw DegeneratePolynomial();
  auto rp = detail::to_rational(p);
  auto g = detail::gcd(rp, detail::to_rational(p.derivative()));
  auto q = detail::quotient(rp, g);
  IntegerPolynomial result = detail::positive_primitive(q);
  if (result.leading() < 0) {
    std::vector<Integer> negated;
    for (const auto& c : result.coeffs()) negated.push_back(-c);
    result = IntegerPolynomial(std::move(negated));
  }
  return result;
}

namespace detail {

RationalPoly to_rational(const IntegerPolynomial& p) {
  RationalPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly remainder(RationalPoly a, const RationalPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RationalPoly quotient(RationalPoly a, const RationalPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  const std::size_t db = b.size() - 1;
  RationalPoly q(a.size() - db, Rational(0));
  while (a.size() >= b.size()) {
    Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = factor;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
  }
  trim(q);
  return q;
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RationalPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

IntegerPolynomial positive_primitive(const RationalPoly& p) {
  Integer den_lcm = 1;
  for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> coeffs;
  Integer content = 0;
  for (const auto& c : p) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    coeffs.push_back(v);
  }
  if (content > 1) {
    for (auto& c : coeffs) c /= content;
  }
  return IntegerPolynomial(std::move(coeffs));
}

}  // namespace detail
}  // namespace packcert::exactnum
