#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "twistkit/rational.hpp"

namespace twistkit {

// Dense univariate polynomial over Q, coefficients stored ascending.
// Invariant: no trailing zero coefficients; the zero polynomial has an empty
// coefficient vector and degree() == -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(const Rational& constant);
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly x();
  static RationalPoly monomial(int degree, const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const;

  // Coefficient of x^i; zero beyond the degree.
  const Rational& coeff(int i) const;
  const Rational& leading() const;  // requires nonzero
  const std::vector<Rational>& coeffs() const { return c_; }

  RationalPoly operator-() const;
  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly operator*(const Rational& s) const;
  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

  // Euclidean division; divisor must be nonzero.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const;
  RationalPoly operator/(const RationalPoly& d) const;  // Euclidean quotient
  RationalPoly operator%(const RationalPoly& d) const;
  bool divides(const RationalPoly& multiple) const;  // this | multiple exactly

  RationalPoly pow(unsigned e) const;
  RationalPoly derivative() const;
  RationalPoly monic() const;  // requires nonzero
  RationalPoly compose(const RationalPoly& inner) const;  // this(inner(x))
  Rational eval(const Rational& t) const;

  // Total ordering used for canonical sorting of factor lists: by degree,
  // then coefficients from the top down.
  std::strong_ordering operator<=>(const RationalPoly& o) const;

  // Human-readable form, e.g. "x^8 - 7*x^4 + 16".
  std::string to_display_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);  // monic or zero
RationalPoly squarefree_part(const RationalPoly& a);              // a / gcd(a, a'), monic

// Resultant of two rational polynomials (0 if either is zero and the other nonconstant;
// follows the Sylvester determinant convention).
Rational resultant(const RationalPoly& a, const RationalPoly& b);

}  // namespace twistkit
