#include "packcert/exactnum/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace packcert::exactnum {
namespace {

[[noreturn]] void bad_rational(std::string_view text) {
  throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) bad_rational(whole);
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) bad_rational(whole);
  }
  return Integer(std::string(digits), 10);
}

Integer pow10(unsigned long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  if (rest.empty()) bad_rational(text);

  Rational value;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(rest.substr(0, slash), text);
    Integer den = parse_integer(rest.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
    value.canonicalize();
  } else {
    std::string_view mantissa = rest;
    long exponent = 0;
    if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = rest.substr(0, e);
      std::string_view exp_text = rest.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (exp_text.size() > 6) bad_rational(text);
      exponent = parse_integer(exp_text, text).get_si();
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      std::string_view int_part = mantissa.substr(0, dot);
      std::string_view frac_part = mantissa.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) bad_rational(text);
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      digits = std::string(mantissa);
    }
    Integer num = parse_integer(digits, text);
    if (exponent >= 0) {
      value = Rational(num * pow10(static_cast<unsigned long>(exponent)));
    } else {
      value = Rational(num, pow10(static_cast<unsigned long>(-exponent)));
      value.canonicalize();
    }
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits, bool round_up) {
  Integer scale = pow10(static_cast<unsigned long>(digits));
  Rational scaled = value * scale;
  Integer q;
  if (round_up) {
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  } else {
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  }
  bool negative = q < 0;
  Integer magnitude = abs(q);
  std::string body = magnitude.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  return negative ? "-" + body : body;
}

double to_double(const Rational& value) { return value.get_d(); }

Rational power_of_two(long exponent) {
  Integer p = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  return Rational(Integer(1), p);
}

Rational floor_dyadic(const Rational& value, long bits) {
  Integer num = value.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), value.get_den_mpz_t());
  Rational result(q, Integer(1));
  mpq_div_2exp(result.get_mpq_t(), result.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  return result;
}

Rational ceil_dyadic(const Rational& value, long bits) {
  Integer num = value.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), value.get_den_mpz_t());
  Rational result(q, Integer(1));
  mpq_div_2exp(result.get_mpq_t(), result.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  return result;
}

std::size_t denominator_bits(const Rational& value) {
  return mpz_sizeinbase(value.get_den_mpz_t(), 2);
}

}  // namespace packcert::exactnum
