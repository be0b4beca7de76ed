#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "test_util.hpp"
#include "twistkit/fourier.hpp"

using namespace twistkit;
using testutil::run;

namespace {

HalfIntegralMatrix hm(std::vector<std::vector<long>> twice) {
  std::vector<std::vector<Integer>> t(twice.size());
  for (size_t i = 0; i < twice.size(); ++i)
    for (long v : twice[i]) t[i].emplace_back(v);
  return HalfIntegralMatrix::from_twice(std::move(t));
}

NFElem qi_elem(const NumberFieldPtr& K, long a, long b) {
  return K->element(RationalPoly({Rational(a), Rational(b)}));
}

SiegelPoint diagonal_point(double t, int genus) {
  Eigen::MatrixXcd tau = Eigen::MatrixXcd::Zero(genus, genus);
  for (int i = 0; i < genus; ++i) tau(i, i) = std::complex<double>(0, t);
  return SiegelPoint(tau);
}

bool same_terms(const SiegelFourierExpansion& a, const SiegelFourierExpansion& b) {
  return a.terms() == b.terms();
}

}  // namespace

int main() {
  NumberFieldPtr QI = NumberField::make(RationalPoly({Rational(1), Rational(0), Rational(1)}));

  run("half-integral index validation", [&] {
    RationalMatrix ok(2, 2);
    ok.at(0, 0) = Rational(1);
    ok.at(1, 1) = Rational(1);
    ok.at(0, 1) = ok.at(1, 0) = Rational(1, 2);
    HalfIntegralMatrix A = HalfIntegralMatrix::from_rational(ok);
    REQUIRE(A.at(0, 1) == Rational(1, 2));
    REQUIRE(A.twice_at(0, 1) == 1);
    REQUIRE(A.trace() == 2);
    REQUIRE(A.to_rational() == ok);
    RationalMatrix bad_diag(2, 2);
    bad_diag.at(0, 0) = Rational(1, 2);
    bad_diag.at(1, 1) = Rational(1);
    REQUIRE_THROWS(HalfIntegralMatrix::from_rational(bad_diag), std::invalid_argument);
    RationalMatrix asym(2, 2);
    asym.at(0, 1) = Rational(1);
    REQUIRE_THROWS(HalfIntegralMatrix::from_rational(asym), std::invalid_argument);
    REQUIRE_THROWS(hm({{1, 0}, {0, 2}}), std::invalid_argument);  // odd diagonal of 2A
    REQUIRE_THROWS(HalfIntegralMatrix::from_rational(RationalMatrix(2, 3)), std::invalid_argument);
  });

  run("definiteness tests are exact", [&] {
    REQUIRE(hm({{2, 1}, {1, 2}}).is_positive_definite());
    REQUIRE(hm({{2, 1}, {1, 2}}).is_psd());
    HalfIntegralMatrix psd_only = hm({{2, 2}, {2, 2}});
    REQUIRE(psd_only.is_psd());
    REQUIRE(!psd_only.is_positive_definite());
    REQUIRE(!hm({{2, 4}, {4, 2}}).is_psd());
    HalfIntegralMatrix zero(2);
    REQUIRE(zero.is_zero());
    REQUIRE(zero.is_psd());
    REQUIRE(!zero.is_positive_definite());
    HalfIntegralMatrix corner = hm({{2, 0}, {0, 0}});
    REQUIRE(corner.is_psd());
    REQUIRE(!corner.is_positive_definite());
    REQUIRE(corner.last_row_col_zero());
    REQUIRE(corner.drop_last() == hm({{2}}));
    REQUIRE(!hm({{2, 1}, {1, 2}}).last_row_col_zero());
  });

  run("index enumeration matches direct search", [&] {
    auto one = psd_indices_up_to_trace(1, 5);
    REQUIRE(one.size() == 6);  // [0], [1], ..., [5]
    for (long tmax : {1L, 2L, 3L}) {
      auto got = psd_indices_up_to_trace(2, tmax);
      long count = 0;
      long d = 2 * tmax;
      for (long a = 0; a <= d; a += 2)
        for (long c = 0; c <= d; c += 2)
          for (long b = -d; b <= d; ++b) {
            if ((a + c) / 2 > tmax) continue;
            HalfIntegralMatrix A = hm({{a, b}, {b, c}});
            if (A.is_psd()) ++count;
          }
      REQUIRE(static_cast<long>(got.size()) == count);
      for (size_t i = 0; i + 1 < got.size(); ++i) REQUIRE(got[i] < got[i + 1]);  // sorted
      for (const auto& A : got) {
        REQUIRE(A.is_psd());
        REQUIRE(A.trace() <= tmax);
      }
    }
  });

  run("degree lowering is exactly linear", [&] {
    std::mt19937_64 rng(606060);
    auto indices = psd_indices_up_to_trace(2, 4);
    for (int trial = 0; trial < 10; ++trial) {
      SiegelFourierExpansion F(2, 4, QI), G(2, 4, QI);
      for (const auto& A : indices) {
        if (rng() % 3 == 0) F.set(A, qi_elem(QI, static_cast<long>(rng() % 7) - 3,
                                             static_cast<long>(rng() % 7) - 3));
        if (rng() % 3 == 0) G.set(A, qi_elem(QI, static_cast<long>(rng() % 7) - 3,
                                             static_cast<long>(rng() % 7) - 3));
      }
      NFElem c1 = qi_elem(QI, 2, -1), c2 = qi_elem(QI, 0, 3);
      SiegelFourierExpansion combo = F.scaled(c1).plus(G.scaled(c2));
      SiegelFourierExpansion expect = F.phi().scaled(c1).plus(G.phi().scaled(c2));
      REQUIRE(same_terms(combo.phi(), expect));
    }
  });

  run("degree lowering kills positive-definite support", [&] {
    SiegelFourierExpansion F(2, 4, QI);
    for (const auto& A : psd_indices_up_to_trace(2, 4))
      if (A.is_positive_definite()) F.set(A, QI->one());
    REQUIRE(F.is_cusp_truncated());
    REQUIRE(!F.terms().empty());
    SiegelFourierExpansion G = F.phi();
    REQUIRE(G.genus() == 1);
    REQUIRE(G.terms().empty());
  });

  run("degree lowering sees singular indices", [&] {
    SiegelFourierExpansion F(2, 4, QI);
    F.set(hm({{2, 0}, {0, 0}}), qi_elem(QI, 0, 5));   // survives: last row/col zero
    F.set(hm({{2, 1}, {1, 2}}), QI->one());           // killed: positive definite
    F.set(hm({{0, 0}, {0, 2}}), QI->one());           // killed: last column nonzero
    REQUIRE(!F.is_cusp_truncated());
    SiegelFourierExpansion G = F.phi();
    REQUIRE(G.genus() == 1);
    REQUIRE(G.terms().size() == 1);
    REQUIRE(G.coefficient(hm({{2}})) == qi_elem(QI, 0, 5));
    // genus 1 -> genus 0: the constant term survives
    SiegelFourierExpansion H(1, 4, QI);
    H.set(hm({{0}}), qi_elem(QI, 7, 0));
    H.set(hm({{2}}), qi_elem(QI, 1, 1));
    SiegelFourierExpansion H0 = H.phi();
    REQUIRE(H0.genus() == 0);
    REQUIRE(H0.terms().size() == 1);
    REQUIRE(H0.coefficient(HalfIntegralMatrix(0)) == qi_elem(QI, 7, 0));
  });

  run("expansion bookkeeping", [&] {
    SiegelFourierExpansion F(2, 3, QI);
    HalfIntegralMatrix A = hm({{2, 1}, {1, 2}});
    F.set(A, QI->one());
    REQUIRE(F.coefficient(A).is_one());
    F.set(A, QI->zero());  // zero erases
    REQUIRE(F.terms().empty());
    REQUIRE(F.coefficient(A).is_zero());
    REQUIRE_THROWS(F.set(hm({{4, 4}, {4, 4}}), QI->one()), std::invalid_argument);  // trace 4 > 3
    REQUIRE_THROWS(F.set(hm({{2, 4}, {4, 2}}), QI->one()), std::invalid_argument);  // not psd
    REQUIRE_THROWS(F.set(hm({{2}}), QI->one()), std::invalid_argument);             // wrong size
    REQUIRE(F.phi().bound() == 3);
  });

  run("cusp-truncated evaluations decay", [&] {
    SiegelFourierExpansion F(2, 4, QI);
    F.set(hm({{2, 1}, {1, 2}}), qi_elem(QI, 1, 2));
    F.set(hm({{4, 0}, {0, 2}}), qi_elem(QI, -3, 1));
    F.set(hm({{2, -1}, {-1, 4}}), qi_elem(QI, 2, 2));
    REQUIRE(F.is_cusp_truncated());
    long min_trace = 2;  // smallest index trace in the support
    double norm_sum = 0;
    for (const auto& [A, t] : F.terms()) {
      norm_sum += std::hypot(t.rep().coeff(0).get_d(), t.rep().coeff(1).get_d());
      (void)A;
    }
    const std::complex<double> gen_image(0, 1);
    for (double t : {5.0, 10.0, 20.0}) {
      double bound = norm_sum * std::exp(-3.14159265358979 * min_trace * t);
      double value = std::abs(F.evaluate(diagonal_point(t, 2), gen_image));
      REQUIRE(value <= bound);
      // one more step of t multiplies the bound by at least exp(-pi * min_trace)
      double next = std::abs(F.evaluate(diagonal_point(t + 1, 2), gen_image));
      REQUIRE(next <= value * std::exp(-3.14159265358979 * min_trace) * 1.0000001);
    }
  });

  run("evaluation is additive", [&] {
    std::mt19937_64 rng(71717);
    SiegelFourierExpansion F(2, 3, QI), G(2, 3, QI);
    for (const auto& A : psd_indices_up_to_trace(2, 3)) {
      if (rng() % 2) F.set(A, qi_elem(QI, static_cast<long>(rng() % 5) - 2, 1));
      if (rng() % 2) G.set(A, qi_elem(QI, 1, static_cast<long>(rng() % 5) - 2));
    }
    SiegelPoint tau = diagonal_point(1.5, 2);
    const std::complex<double> i01(0, 1);
    std::complex<double> lhs = F.plus(G).evaluate(tau, i01);
    std::complex<double> rhs = F.evaluate(tau, i01) + G.evaluate(tau, i01);
    REQUIRE(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
  });

  return testutil::summary("test_fourier");
}
