#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "packcert/exactnum/expression.hpp"
#include "packcert/packing/packing.hpp"

namespace packcert::testing {

using exactnum::Expression;
using exactnum::Rational;
using packing::PeriodicPacking;

using Rng = std::mt19937_64;

long long uniform(Rng& rng, long long lo, long long hi);
/// num / den with |num| <= num_max, 1 <= den <= den_max.
Rational random_rational(Rng& rng, long long num_max, long long den_max);
/// In [lo, hi] with denominator den_max.
Rational random_rational_in(Rng& rng, const Rational& lo, const Rational& hi, long long den_max);

/// sqrt-free tree over rational constants and the variables `names`;
/// every divisor is a nonzero constant or (e)^2 + c with c >= 1/2.
Expression random_expression(Rng& rng, int depth, const std::vector<std::string>& names);

/// Random expression text for the scene grammar (no whitespace).
std::string random_expression_text(Rng& rng, int depth, const std::vector<std::string>& names);

struct RootPolynomial {
  std::vector<long long> coeffs;  // ascending
  std::vector<Rational> rational_roots;
  long long square_root_of = 0;  // when nonzero, +-sqrt of this are roots too
};

/// Degree <= 6 with distinct real roots in [-4, 4]: linear factors with
/// denominators <= 4, optionally x^2 - p or an irreducible positive quadratic.
RootPolynomial random_root_polynomial(Rng& rng);

/// Rational lattice with 1 to 3 discs of rational radii, small enough that
/// no two discs overlap.
PeriodicPacking random_lattice_packing(Rng& rng);

/// Integer 2x2 matrix with determinant +-1.
std::array<long long, 4> random_unimodular(Rng& rng);

/// Same packing described by the basis t1' = a t1 + b t2, t2' = c t1 + d t2.
PeriodicPacking change_basis(const PeriodicPacking& p, const std::array<long long, 4>& m);

/// Same packing with disc ids permuted by `new_id[i]` for the i-th disc.
PeriodicPacking relabel(const PeriodicPacking& p, const std::vector<int>& new_id);

}  // namespace packcert::testing
