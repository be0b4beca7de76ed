#include <algorithm>
#include <random>
#include <vector>

#include "test_util.hpp"
#include "twistkit/poly.hpp"

using namespace twistkit;
using testutil::run;

namespace {

std::mt19937_64 rng(424242);

Rational random_rational() {
  long num = static_cast<long>(rng() % 11) - 5;
  long den = 1 + static_cast<long>(rng() % 3);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

RationalPoly random_poly(int max_degree) {
  int d = static_cast<int>(rng() % (max_degree + 1));
  std::vector<Rational> c(static_cast<size_t>(d) + 1);
  for (auto& q : c) q = random_rational();
  return RationalPoly(std::move(c));
}

}  // namespace

int main() {
  run("construction and normalization", [] {
    RationalPoly z;
    REQUIRE(z.is_zero());
    REQUIRE(z.degree() == -1);
    RationalPoly trimmed(std::vector<Rational>{Rational(3), Rational(0), Rational(0)});
    REQUIRE(trimmed.degree() == 0);
    REQUIRE(trimmed.is_constant());
    REQUIRE(RationalPoly::x().degree() == 1);
    REQUIRE(RationalPoly::x().coeff(1) == 1);
    RationalPoly m = RationalPoly::monomial(4, Rational(7));
    REQUIRE(m.degree() == 4);
    REQUIRE(m.coeff(4) == 7);
    REQUIRE(m.coeff(2) == 0);
    REQUIRE(m.coeff(9) == 0);  // beyond the degree
    REQUIRE(!m.is_monic());
    REQUIRE(m.monic().is_monic());
    REQUIRE(m.leading() == 7);
  });

  run("ring axioms on random polynomials", [] {
    for (int i = 0; i < 40; ++i) {
      RationalPoly f = random_poly(6), g = random_poly(6), h = random_poly(4);
      REQUIRE(f + g == g + f);
      REQUIRE(f * g == g * f);
      REQUIRE((f + g) + h == f + (g + h));
      REQUIRE((f * g) * h == f * (g * h));
      REQUIRE(f * (g + h) == f * g + f * h);
      REQUIRE(f - f == RationalPoly());
      REQUIRE(f + (-f) == RationalPoly());
      REQUIRE(f * Rational(0) == RationalPoly());
    }
  });

  run("euclidean division", [] {
    for (int i = 0; i < 40; ++i) {
      RationalPoly f = random_poly(8);
      RationalPoly g = random_poly(4);
      if (g.is_zero()) continue;
      auto [q, r] = f.divmod(g);
      REQUIRE(q * g + r == f);
      REQUIRE(r.degree() < g.degree());
      REQUIRE(f / g == q);
      REQUIRE(f % g == r);
      REQUIRE(g.divides(g * f));
    }
    RationalPoly f({Rational(1), Rational(2), Rational(1)});  // (x+1)^2
    RationalPoly g({Rational(1), Rational(1)});
    REQUIRE(g.divides(f));
    REQUIRE(!f.divides(g));
    REQUIRE_THROWS(f.divmod(RationalPoly()), std::exception);
  });

  run("gcd and squarefree part", [] {
    RationalPoly a({Rational(1), Rational(1)});                 // x + 1
    RationalPoly b({Rational(2), Rational(1)});                 // x + 2
    RationalPoly h({Rational(3), Rational(0), Rational(2)});    // 2x^2 + 3
    REQUIRE(gcd(a * h, b * h) == h.monic());
    REQUIRE(gcd(a, b).degree() == 0);
    REQUIRE(gcd(RationalPoly(), a) == a.monic());
    RationalPoly c({Rational(2), Rational(0), Rational(1)});    // x^2 + 2
    REQUIRE(squarefree_part(a * a * c) == a * c);
    REQUIRE(squarefree_part(a * a * a * c * c) == a * c);
    for (int i = 0; i < 20; ++i) {
      RationalPoly f = random_poly(5), g = random_poly(5);
      if (f.is_zero() || g.is_zero()) continue;
      RationalPoly d = gcd(f, g);
      REQUIRE(d.divides(f));
      REQUIRE(d.divides(g));
    }
  });

  run("evaluation, composition, powers", [] {
    for (int i = 0; i < 30; ++i) {
      RationalPoly f = random_poly(5), g = random_poly(3);
      Rational t = random_rational();
      REQUIRE((f * g).eval(t) == f.eval(t) * g.eval(t));
      REQUIRE((f + g).eval(t) == f.eval(t) + g.eval(t));
      REQUIRE(f.compose(g).eval(t) == f.eval(g.eval(t)));
      REQUIRE(f.pow(3) == f * f * f);
      REQUIRE(f.pow(0) == RationalPoly(Rational(1)));
    }
    RationalPoly octic({Rational(16), Rational(0), Rational(0), Rational(0), Rational(-7),
                        Rational(0), Rational(0), Rational(0), Rational(1)});
    REQUIRE(octic.eval(Rational(0)) == 16);
    REQUIRE(octic.eval(Rational(1)) == 10);
    REQUIRE(octic.derivative().coeff(7) == 8);
    REQUIRE(octic.derivative().coeff(3) == -28);
  });

  run("resultant", [] {
    RationalPoly f({Rational(1), Rational(0), Rational(1)});   // x^2 + 1
    RationalPoly g({Rational(-2), Rational(0), Rational(1)});  // x^2 - 2
    REQUIRE(resultant(f, g) == 9);  // (i^2-2)(-i^2... both factors give -3
    REQUIRE(resultant(f, f) == 0);
    RationalPoly a({Rational(-1), Rational(1)});               // x - 1
    RationalPoly b({Rational(-2), Rational(1)});               // x - 2
    REQUIRE(resultant(a, b) == -1);  // b evaluated at the root of a
    REQUIRE(resultant(b, a) == 1);   // sign flips with the argument order
    for (int i = 0; i < 20; ++i) {
      RationalPoly u = random_poly(3), v = random_poly(3), w = random_poly(2);
      if (u.is_zero() || v.is_zero() || w.is_zero()) continue;
      REQUIRE(resultant(u, v * w) == resultant(u, v) * resultant(u, w));
      bool share_root = gcd(u, v).degree() > 0;
      REQUIRE((resultant(u, v) == 0) == share_root);
    }
  });

  run("display strings", [] {
    RationalPoly octic({Rational(16), Rational(0), Rational(0), Rational(0), Rational(-7),
                        Rational(0), Rational(0), Rational(0), Rational(1)});
    REQUIRE(octic.to_display_string() == "x^8 - 7*x^4 + 16");
    RationalPoly q({Rational(2), Rational(0), Rational(1)});
    REQUIRE(q.to_display_string() == "x^2 + 2");
    REQUIRE(RationalPoly().to_display_string() == "0");
  });

  run("canonical ordering", [] {
    RationalPoly a({Rational(1), Rational(1)});
    RationalPoly b({Rational(2), Rational(1)});
    RationalPoly c({Rational(0), Rational(0), Rational(1)});
    std::vector<RationalPoly> v{c, b, a};
    std::sort(v.begin(), v.end());
    REQUIRE(v[0] == a);
    REQUIRE(v[1] == b);
    REQUIRE(v[2] == c);  // degree dominates
  });

  return testutil::summary("test_rational_poly");
}
