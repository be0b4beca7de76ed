#include <random>
#include <vector>

#include "test_util.hpp"
#include "twistkit/factor.hpp"
#include "twistkit/number_field.hpp"

using namespace twistkit;
using testutil::run;

namespace {

RationalPoly from_longs(std::vector<long> v) {
  std::vector<Rational> c(v.size());
  for (size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
  return RationalPoly(std::move(c));
}

NFElem random_elem(const NumberFieldPtr& K, std::mt19937_64& rng) {
  std::vector<Rational> c(static_cast<size_t>(K->degree()));
  for (auto& q : c) q = Rational(static_cast<long>(rng() % 9) - 4);
  return K->element(RationalPoly(std::move(c)));
}

}  // namespace

int main() {
  NumberFieldPtr QI = NumberField::make(from_longs({1, 0, 1}));        // Q(i)
  NumberFieldPtr Z8 = NumberField::make(from_longs({1, 0, 0, 0, 1}));  // Q(z), z^4 = -1
  NumberFieldPtr C2 = NumberField::make(from_longs({-2, 0, 0, 1}));    // Q(cbrt 2)

  run("field construction validates", [&] {
    REQUIRE_THROWS(NumberField::make(from_longs({4, 0, 0, 0, 1})), std::domain_error);  // reducible
    REQUIRE_THROWS(NumberField::make(from_longs({1, 0, 2})), std::domain_error);        // not monic
    REQUIRE(NumberField::rationals()->degree() == 1);
    REQUIRE(QI->degree() == 2);
    REQUIRE(Z8->degree() == 4);
  });

  run("arithmetic and inverses", [&] {
    NFElem i = QI->generator();
    REQUIRE(i * i == QI->from_rational(Rational(-1)));
    NFElem u = QI->one() + i;                       // 1 + i
    REQUIRE(u * (QI->one() - i) == QI->from_rational(Rational(2)));
    REQUIRE(u.inverse() == (QI->one() - i) * Rational(1, 2));
    REQUIRE(u * u.inverse() == QI->one());
    REQUIRE(u.pow(-2) == (u * u).inverse());
    REQUIRE(u.pow(0).is_one());
    REQUIRE_THROWS(QI->zero().inverse(), std::domain_error);
    std::mt19937_64 rng(5150);
    for (int t = 0; t < 30; ++t) {
      NFElem a = random_elem(Z8, rng), b = random_elem(Z8, rng);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) * (a - b) == a * a - b * b);
      if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
  });

  run("minimal polynomials", [&] {
    REQUIRE(minimal_polynomial(QI->generator()) == from_longs({1, 0, 1}));
    REQUIRE(minimal_polynomial(QI->one() + QI->generator()) == from_longs({2, -2, 1}));
    REQUIRE(minimal_polynomial(QI->from_rational(Rational(7, 2))) ==
            RationalPoly({Rational(-7, 2), Rational(1)}));
    NFElem z = Z8->generator();
    REQUIRE(minimal_polynomial(z + z.pow(3)) == from_longs({2, 0, 1}));  // x^2 + 2
    REQUIRE(minimal_polynomial(z - z.pow(3)) == from_longs({-2, 0, 1})); // x^2 - 2
    REQUIRE(minimal_polynomial(z.pow(2)) == from_longs({1, 0, 1}));      // z^2 = i
    REQUIRE(minimal_polynomial(C2->generator().pow(2)) == from_longs({-4, 0, 0, 1}));
  });

  run("automorphism groups", [&] {
    auto gi = field_automorphisms(QI);
    REQUIRE(gi.size() == 2);
    REQUIRE(gi[0].is_identity());
    REQUIRE(gi[1].gen_image() == -QI->generator());
    auto g8 = field_automorphisms(Z8);
    REQUIRE(g8.size() == 4);  // Galois, Klein four-group
    REQUIRE(g8[0].is_identity());
    for (const auto& s : g8) {
      REQUIRE(s.compose(s).is_identity());  // every element has order <= 2
      REQUIRE(s.inverse() == s);
    }
    // closure under composition
    for (const auto& s : g8)
      for (const auto& t : g8) {
        auto st = s.compose(t);
        bool found = false;
        for (const auto& u : g8) found = found || u == st;
        REQUIRE(found);
      }
    REQUIRE(field_automorphisms(C2).size() == 1);  // not Galois: only the identity
  });

  run("automorphisms are ring maps", [&] {
    std::mt19937_64 rng(7311);
    for (const auto& s : field_automorphisms(Z8))
      for (int t = 0; t < 10; ++t) {
        NFElem a = random_elem(Z8, rng), b = random_elem(Z8, rng);
        REQUIRE(s(a + b) == s(a) + s(b));
        REQUIRE(s(a * b) == s(a) * s(b));
        REQUIRE(s(a * Rational(3, 7)) == s(a) * Rational(3, 7));  // fixes Q pointwise
      }
  });

  run("express in powers", [&] {
    NFElem z = Z8->generator();
    NFElem w = z + z.pow(3);  // w^2 = -2
    auto t = express_in_powers(w * Rational(-11), w);
    REQUIRE(t.has_value());
    REQUIRE(eval_rational_poly(*t, w) == w * Rational(-11));
    auto c = express_in_powers(Z8->from_rational(Rational(-2)), w);
    REQUIRE(c.has_value());
    REQUIRE(eval_rational_poly(*c, w) == Z8->from_rational(Rational(-2)));
    REQUIRE(!express_in_powers(z.pow(2), w));  // i is not in Q(sqrt(-2))
    REQUIRE(!express_in_powers(z, w));
    auto self = express_in_powers(z, z);
    REQUIRE(self.has_value());
    REQUIRE(eval_rational_poly(*self, z) == z);
  });

  run("generated subfields", [&] {
    NFElem z = Z8->generator();
    NFElem w = z + z.pow(3);
    SubfieldResult s = subfield_generated(Z8, {w});
    REQUIRE(s.subfield->degree() == 2);
    REQUIRE(s.subfield->poly() == minimal_polynomial(s.generator_image));
    REQUIRE(express_in_powers(w, s.generator_image).has_value());
    REQUIRE(express_in_powers(s.generator_image, w).has_value());
    SubfieldResult q = subfield_generated(Z8, {});
    REQUIRE(q.subfield->degree() == 1);
    SubfieldResult full = subfield_generated(Z8, {z});
    REQUIRE(full.subfield->degree() == 4);
    SubfieldResult two = subfield_generated(Z8, {w, z.pow(2)});  // sqrt(-2) and i generate all
    REQUIRE(two.subfield->degree() == 4);
  });

  run("compositum", [&] {
    NumberFieldPtr R2 = NumberField::make(from_longs({-2, 0, 1}));  // Q(sqrt 2)
    CompositumResult c = compositum(QI, R2);
    REQUIRE(c.field->degree() == 4);
    NFElem li = c.left(QI->generator());
    NFElem ri = c.right(R2->generator());
    REQUIRE(li * li == c.field->from_rational(Rational(-1)));
    REQUIRE(ri * ri == c.field->from_rational(Rational(2)));
    REQUIRE(minimal_polynomial(li * ri) == from_longs({2, 0, 1}));  // sqrt(-2)
    CompositumResult same = compositum(Z8, Z8);
    REQUIRE(same.field->poly() == Z8->poly());
    REQUIRE(same.left(Z8->generator()) == same.field->generator());
    REQUIRE(eval_rational_poly(Z8->poly(), same.right(Z8->generator())).is_zero());
  });

  run("polynomials over a field", [&] {
    NFPoly h = NFPoly::from_rational_poly(QI, from_longs({1, 0, 1}));
    auto roots = roots_in_field(h);
    REQUIRE(roots.size() == 2);
    REQUIRE(roots[0] == -roots[1]);
    auto factors = factor_over_field(h);
    REQUIRE(factors.size() == 2);
    for (const auto& f : factors) {
      REQUIRE(f.factor.degree() == 1);
      REQUIRE(f.multiplicity == 1);
      REQUIRE(f.factor.is_monic());
    }
    // x^2 + 2 picks out the documented generator of the quadratic subfield
    NFPoly g = NFPoly::from_rational_poly(Z8, from_longs({2, 0, 1}));
    auto r8 = roots_in_field(g);
    REQUIRE(r8.size() == 2);
    NFElem z = Z8->generator();
    REQUIRE((r8[0] == z + z.pow(3)) || (r8[1] == z + z.pow(3)));
    // x^2 - 2 has no roots in Q(i)
    REQUIRE(roots_in_field(NFPoly::from_rational_poly(QI, from_longs({-2, 0, 1}))).empty());
    // repeated factors carry multiplicities
    NFPoly lin(QI, {QI->generator(), QI->one()});  // x + i
    auto rep = factor_over_field(lin * lin);
    REQUIRE(rep.size() == 1);
    REQUIRE(rep[0].multiplicity == 2);
  });

  run("field embeddings", [&] {
    NumberFieldPtr R2 = NumberField::make(from_longs({-2, 0, 1}));
    NFElem z = Z8->generator();
    FieldEmbedding emb(R2, Z8, z - z.pow(3));  // sqrt 2 = z + z^7
    std::mt19937_64 rng(808);
    for (int t = 0; t < 15; ++t) {
      std::vector<Rational> c{Rational(static_cast<long>(rng() % 9) - 4),
                              Rational(static_cast<long>(rng() % 9) - 4)};
      NFElem a = R2->element(RationalPoly(c));
      NFElem b = random_elem(R2, rng);
      REQUIRE(emb(a * b) == emb(a) * emb(b));
      REQUIRE(emb(a + b) == emb(a) + emb(b));
    }
    REQUIRE(emb(R2->from_rational(Rational(5, 3))) == Z8->from_rational(Rational(5, 3)));
    // gen image must actually be a root
    REQUIRE_THROWS(FieldEmbedding(R2, Z8, z), std::domain_error);
  });

  run("roots of unity", [&] {
    REQUIRE(Z8->generator().multiplicative_order() == 8);
    REQUIRE(QI->generator().multiplicative_order() == 4);
    REQUIRE(QI->one().multiplicative_order() == 1);
    REQUIRE(QI->from_rational(Rational(-1)).multiplicative_order() == 2);
    REQUIRE(!(QI->one() + QI->generator()).multiplicative_order().has_value());
  });

  return testutil::summary("test_number_field");
}
