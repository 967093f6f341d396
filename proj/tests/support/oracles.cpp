#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace packcert::testing {

namespace {

int sign_at(const std::vector<long long>& c, long long k, int shift) {
  // sum c_i k^i 2^(shift (d - i))
  const int d = static_cast<int>(c.size()) - 1;
  __int128 acc = 0;
  __int128 kp = 1;
  for (int i = 0; i <= d; ++i) {
    acc += static_cast<__int128>(c[i]) * kp * (static_cast<__int128>(1) << (shift * (d - i)));
    kp *= k;
  }
  return (acc > 0) - (acc < 0);
}

}  // namespace

std::vector<GridRoot> grid_scan(const std::vector<long long>& coeffs, long long lo_k,
                                long long hi_k, int shift) {
  if (shift * (static_cast<int>(coeffs.size()) - 1) > 100) {
    throw std::invalid_argument("grid too fine for 128-bit evaluation");
  }
  const Rational step = exactnum::power_of_two(-shift);
  std::vector<GridRoot> out;
  int last = 0;
  long long last_k = lo_k;
  for (long long k = lo_k; k <= hi_k; ++k) {
    const int s = sign_at(coeffs, k, shift);
    if (s == 0) {
      out.push_back({Rational(static_cast<long>(k)) * step, Rational(static_cast<long>(k)) * step});
      last = 0;
      continue;
    }
    if (last != 0 && s != last) out.push_back({Rational(static_cast<long>(last_k)) * step, Rational(static_cast<long>(k)) * step});
    last = s;
    last_k = k;
  }
  return out;
}

double apollonius_inner(double r1, double r2, double r3) {
  // Place the three circles, then solve |z - c_i| = r_i + rho.
  const double ax = 0, ay = 0;
  const double bx = r1 + r2, by = 0;
  const double d13 = r1 + r3, d23 = r2 + r3;
  const double cx = (d13 * d13 - d23 * d23 + bx * bx) / (2 * bx);
  const double cy = std::sqrt(d13 * d13 - cx * cx);
  const double xs[3] = {ax, bx, cx}, ys[3] = {ay, by, cy}, rs[3] = {r1, r2, r3};

  // Start from the incenter of the center triangle.
  const double la = d23, lb = d13, lc = r1 + r2;
  double x = (la * ax + lb * bx + lc * cx) / (la + lb + lc);
  double y = (la * ay + lb * by + lc * cy) / (la + lb + lc);
  double rho = 1e300;
  for (int i = 0; i < 3; ++i) rho = std::min(rho, std::hypot(x - xs[i], y - ys[i]) - rs[i]);

  for (int it = 0; it < 200; ++it) {
    double f[3], j[3][3];
    for (int i = 0; i < 3; ++i) {
      const double dx = x - xs[i], dy = y - ys[i], d = std::hypot(dx, dy);
      f[i] = d - rs[i] - rho;
      j[i][0] = dx / d;
      j[i][1] = dy / d;
      j[i][2] = -1;
    }
    // Gaussian elimination with partial pivoting.
    double m[3][4];
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) m[i][k] = j[i][k];
      m[i][3] = -f[i];
    }
    for (int col = 0; col < 3; ++col) {
      int piv = col;
      for (int r = col + 1; r < 3; ++r)
        if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
      for (int k = 0; k < 4; ++k) std::swap(m[col][k], m[piv][k]);
      for (int r = col + 1; r < 3; ++r) {
        const double fct = m[r][col] / m[col][col];
        for (int k = col; k < 4; ++k) m[r][k] -= fct * m[col][k];
      }
    }
    double step[3];
    for (int r = 2; r >= 0; --r) {
      double acc = m[r][3];
      for (int k = r + 1; k < 3; ++k) acc -= m[r][k] * step[k];
      step[r] = acc / m[r][r];
    }
    x += step[0];
    y += step[1];
    rho += step[2];
    if (std::abs(step[0]) + std::abs(step[1]) + std::abs(step[2]) < 1e-16 * (1 + rho)) break;
  }
  return rho;
}

std::pair<double, double> float_tangent_center(double ax, double ay, double ar, double bx,
                                               double by, double br, double r, bool right) {
  // Circle-circle intersection of radii ar + r and br + r.
  const double da = ar + r, db = br + r;
  const double dx = bx - ax, dy = by - ay, d = std::hypot(dx, dy);
  const double along = (da * da - db * db + d * d) / (2 * d);
  const double off = std::sqrt(da * da - along * along);
  const double ux = dx / d, uy = dy / d;
  const double px = ax + along * ux, py = ay + along * uy;
  // Right of the walk is the direction (uy, -ux).
  const double sgn = right ? 1.0 : -1.0;
  return {px + sgn * off * uy, py - sgn * off * ux};
}

}  // namespace packcert::testing
