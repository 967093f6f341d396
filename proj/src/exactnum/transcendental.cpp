#include "packcert/exactnum/transcendental.hpp"

#include <map>
#include <mutex>

namespace packcert::exactnum {
namespace {

constexpr const char* kPiLower =
    "3.1415926535897932384626433832795028841971693993751058209749445923";
constexpr long kStoredPiBits = 200;  // 10^-64 > 2^-213

// Alternating Taylor series for |x| <= 1/2.
Interval atan_series(const Rational& x, long bits) {
  const long work = bits + 16;
  const Rational tolerance = power_of_two(-(bits + 8));
  Interval x2 = round_outward(Interval(x * x), work);
  Interval power = Interval(x);
  Interval sum;
  for (long k = 0;; ++k) {
    Interval term = round_outward(power / Interval(Rational(2 * k + 1)), work);
    sum = round_outward(k % 2 == 0 ? sum + term : sum - term, work);
    power = round_outward(power * x2, work);
    Rational next = power.magnitude() / (2 * k + 3);
    if (next < tolerance) return sum + Interval(-next, next);
  }
}

Interval atan_point(const Rational& t, long bits);

Interval half_pi(long bits) {
  Interval p = pi_enclosure(bits + 2);
  return Interval(p.lo() / 2, p.hi() / 2);
}

Interval atan_unit(const Rational& t, long bits) {
  // atan(t) = atan(1/2) + atan((t - 1/2) / (1 + t/2)); the reduced argument
  // stays within [-0.4, 0.2] for t in [0, 1].
  Rational reduced = (t - Rational(1, 2)) / (1 + t / 2);
  return atan_series(Rational(1, 2), bits) + atan_series(reduced, bits);
}

Interval atan_point(const Rational& t, long bits) {
  if (t == 0) return Interval(0);
  if (t < 0) return -atan_point(-t, bits);
  if (t > 1) return half_pi(bits) - atan_unit(1 / t, bits);
  return atan_unit(t, bits);
}

Interval machin_pi(long bits) {
  Interval a = atan_series(Rational(1, 5), bits + 6);
  Interval b = atan_series(Rational(1, 239), bits + 6);
  return Interval(16) * a - Interval(4) * b;
}

Interval acos_point(const Rational& c, long bits) {
  if (c >= 1) return Interval(0);
  if (c <= -1) return pi_enclosure(bits);
  Interval root = sqrt(Interval((1 - c) / (1 + c)), bits + 8);
  Interval lo = atan_point(root.lo(), bits + 4);
  Interval hi = atan_point(root.hi(), bits + 4);
  return Interval(2 * lo.lo(), 2 * hi.hi());
}

}  // namespace

Interval pi_enclosure(long bits) {
  if (bits <= kStoredPiBits) {
    static const Interval stored = [] {
      Rational lo = parse_rational(kPiLower);
      return Interval(lo, lo + parse_rational("1e-64"));
    }();
    return round_outward(stored, bits);
  }
  static std::mutex mutex;
  static std::map<long, Interval> memo;
  std::lock_guard lock(mutex);
  auto it = memo.find(bits);
  if (it == memo.end()) it = memo.emplace(bits, round_outward(machin_pi(bits), bits)).first;
  return it->second;
}

Interval atan_enclosure(const Interval& x, long bits) {
  Interval lo = atan_point(x.lo(), bits);
  Interval hi = x.is_point() ? lo : atan_point(x.hi(), bits);
  return round_outward(Interval(lo.lo(), hi.hi()), bits);
}

Interval acos_enclosure(const Interval& x, long bits) {
  if (x.lo() > 1 || x.hi() < -1) throw std::domain_error("acos argument outside [-1, 1]");
  Rational lo = x.lo() < -1 ? Rational(-1) : x.lo();
  Rational hi = x.hi() > 1 ? Rational(1) : x.hi();
  Interval at_hi = acos_point(hi, bits);
  Interval at_lo = lo == hi ? at_hi : acos_point(lo, bits);
  return round_outward(Interval(at_hi.lo(), at_lo.hi()), bits);
}

}  // namespace packcert::exactnum
