#pragma once

#include <vector>

#include "twistkit/poly.hpp"

namespace twistkit {

struct PolyFactor {
  RationalPoly factor;  // monic, irreducible over Q
  int multiplicity = 1;
};

struct Factorization {
  Rational unit;                   // leading coefficient of the input
  std::vector<PolyFactor> factors;  // sorted by (degree, coefficients)
};

// Complete factorization over Q via squarefree decomposition (Yun), modular
// factorization (Berlekamp over a small prime with squarefree reduction),
// Hensel lifting past the Mignotte bound, and subset recombination.
// Throws std::domain_error on the zero polynomial.
Factorization factor_rational_polynomial(const RationalPoly& p);

// True iff p has degree >= 1 and is irreducible over Q.
bool is_irreducible(const RationalPoly& p);

// One-sided squarefreeness certificate: true means gcd(p, p') = 1 over Q,
// established by a single good prime (gcd of the reductions is constant).
// False means no certifying prime was found among the first candidates and
// callers must fall back to an exact check.
bool certified_squarefree(const RationalPoly& p);

}  // namespace twistkit
