#include <cmath>
#include <random>
#include <vector>

#include "test_util.hpp"
#include "twistkit/embeddings.hpp"
#include "twistkit/factor.hpp"

using namespace twistkit;
using testutil::run;

namespace {

RationalPoly from_longs(std::vector<long> v) {
  std::vector<Rational> c(v.size());
  for (size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
  return RationalPoly(std::move(c));
}

RationalPoly reconstruct(const Factorization& f) {
  RationalPoly p(f.unit);
  for (const PolyFactor& pf : f.factors) p = p * pf.factor.pow(static_cast<unsigned>(pf.multiplicity));
  return p;
}

}  // namespace

int main() {
  run("known irreducibles", [] {
    for (auto coeffs : {std::vector<long>{1, 0, 0, 0, 1},            // x^4 + 1
                        std::vector<long>{16, 0, 0, 0, -7, 0, 0, 0, 1},
                        std::vector<long>{2, 0, 1},                  // x^2 + 2
                        std::vector<long>{1, 0, -1, 0, 1},           // x^4 - x^2 + 1
                        std::vector<long>{-2, 0, 0, 1},              // x^3 - 2
                        std::vector<long>{1, 1, 1, 1, 1, 1, 1}}) {   // 7th cyclotomic
      RationalPoly p = from_longs(coeffs);
      REQUIRE(is_irreducible(p));
      Factorization f = factor_rational_polynomial(p);
      REQUIRE(f.factors.size() == 1);
      REQUIRE(f.factors[0].multiplicity == 1);
      REQUIRE(f.factors[0].factor == p);
      REQUIRE(f.unit == 1);
    }
    REQUIRE(!is_irreducible(from_longs({4, 0, 0, 0, 1})));  // x^4 + 4 splits
    REQUIRE(!is_irreducible(from_longs({1})));              // constants excluded
  });

  run("known splittings", [] {
    // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2)
    Factorization f = factor_rational_polynomial(from_longs({4, 0, 0, 0, 1}));
    REQUIRE(f.factors.size() == 2);
    REQUIRE(f.factors[0].factor == from_longs({2, -2, 1}));
    REQUIRE(f.factors[1].factor == from_longs({2, 2, 1}));
    // x^6 - 1 = (x-1)(x+1)(x^2-x+1)(x^2+x+1)
    Factorization g = factor_rational_polynomial(from_longs({-1, 0, 0, 0, 0, 0, 1}));
    REQUIRE(g.factors.size() == 4);
    for (const PolyFactor& pf : g.factors) {
      REQUIRE(pf.multiplicity == 1);
      REQUIRE(pf.factor.is_monic());
      REQUIRE(is_irreducible(pf.factor));
    }
    REQUIRE(reconstruct(g) == from_longs({-1, 0, 0, 0, 0, 0, 1}));
  });

  run("multiplicities and unit", [] {
    RationalPoly a = from_longs({-1, 1});  // x - 1
    RationalPoly b = from_longs({2, 1});   // x + 2
    RationalPoly p = (a.pow(2) * b.pow(3)) * Rational(6);
    Factorization f = factor_rational_polynomial(p);
    REQUIRE(f.unit == 6);
    REQUIRE(f.factors.size() == 2);
    REQUIRE(f.factors[0].factor == a);
    REQUIRE(f.factors[0].multiplicity == 2);
    REQUIRE(f.factors[1].factor == b);
    REQUIRE(f.factors[1].multiplicity == 3);
    REQUIRE(reconstruct(f) == p);
    Factorization c = factor_rational_polynomial(RationalPoly(Rational(5)));
    REQUIRE(c.unit == 5);
    REQUIRE(c.factors.empty());
    REQUIRE_THROWS(factor_rational_polynomial(RationalPoly()), std::domain_error);
  });

  run("random reconstruction", [] {
    std::mt19937_64 rng(99173);
    for (int trial = 0; trial < 25; ++trial) {
      int d = 1 + static_cast<int>(rng() % 6);
      std::vector<Rational> c(static_cast<size_t>(d) + 1);
      for (auto& q : c) q = Rational(static_cast<long>(rng() % 13) - 6);
      RationalPoly p(std::move(c));
      if (p.is_zero() || p.is_constant()) continue;
      Factorization f = factor_rational_polynomial(p);
      REQUIRE(reconstruct(f) == p);
      for (size_t i = 0; i < f.factors.size(); ++i) {
        const PolyFactor& pf = f.factors[i];
        REQUIRE(pf.factor.is_monic());
        REQUIRE(is_irreducible(pf.factor));
        // multiplicity is sharp
        REQUIRE(pf.factor.pow(static_cast<unsigned>(pf.multiplicity)).divides(p));
        REQUIRE(!pf.factor.pow(static_cast<unsigned>(pf.multiplicity) + 1).divides(p));
        for (size_t j = i + 1; j < f.factors.size(); ++j)
          REQUIRE(gcd(pf.factor, f.factors[j].factor).degree() == 0);
      }
    }
  });

  run("numeric root oracle for the documented octic", [] {
    RationalPoly p = from_longs({16, 0, 0, 0, -7, 0, 0, 0, 1});
    auto roots = complex_roots(p, 192);
    REQUIRE(roots.size() == 8);
    const double sqrt2 = std::sqrt(2.0);
    for (const BigComplex& r : roots) {
      // every root of x^8 - 7x^4 + 16 has absolute value sqrt(2)
      double m = to_complex_double({abs_value(r), mpf_class(0)}).real();
      REQUIRE(std::abs(m - sqrt2) < 1e-12);
      auto z = to_complex_double(r);
      std::complex<double> acc(0, 0);
      for (int i = p.degree(); i >= 0; --i)
        acc = acc * z + std::complex<double>(p.coeff(i).get_d(), 0);
      REQUIRE(std::abs(acc) < 1e-9);
    }
  });

  run("squarefree certificate", [] {
    REQUIRE(certified_squarefree(from_longs({-1, 0, 0, 0, 0, 0, 1})));
    REQUIRE(certified_squarefree(from_longs({16, 0, 0, 0, -7, 0, 0, 0, 1})));
    RationalPoly sq = from_longs({-1, 1}).pow(2);
    REQUIRE(!certified_squarefree(sq));
  });

  return testutil::summary("test_factor");
}
