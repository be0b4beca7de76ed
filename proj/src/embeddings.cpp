#include "twistkit/embeddings.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistkit {
namespace {

BigComplex make_bc(int prec) { return {mpf_class(0, prec), mpf_class(0, prec)}; }

BigComplex add(const BigComplex& a, const BigComplex& b, int prec) {
  BigComplex r = make_bc(prec);
  r.re = a.re + b.re;
  r.im = a.im + b.im;
  return r;
}

BigComplex sub(const BigComplex& a, const BigComplex& b, int prec) {
  BigComplex r = make_bc(prec);
  r.re = a.re - b.re;
  r.im = a.im - b.im;
  return r;
}

BigComplex mul(const BigComplex& a, const BigComplex& b, int prec) {
  BigComplex r = make_bc(prec);
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

BigComplex div(const BigComplex& a, const BigComplex& b, int prec) {
  mpf_class d(0, prec);
  d = b.re * b.re + b.im * b.im;
  if (d == 0) throw std::runtime_error("complex division by zero during root iteration");
  BigComplex r = make_bc(prec);
  r.re = (a.re * b.re + a.im * b.im) / d;
  r.im = (a.im * b.re - a.re * b.im) / d;
  return r;
}

mpf_class abs2(const BigComplex& z, int prec) {
  mpf_class r(0, prec);
  r = z.re * z.re + z.im * z.im;
  return r;
}

// Horner evaluation with mpf coefficients.
BigComplex eval_poly(const std::vector<BigComplex>& coeffs, const BigComplex& z, int prec) {
  BigComplex acc = make_bc(prec);
  for (size_t i = coeffs.size(); i-- > 0;) {
    acc = mul(acc, z, prec);
    acc = add(acc, coeffs[i], prec);
  }
  return acc;
}

}  // namespace

mpf_class abs_value(const BigComplex& z) {
  int prec = static_cast<int>(std::max(z.re.get_prec(), z.im.get_prec()));
  mpf_class r(0, prec);
  r = z.re * z.re + z.im * z.im;
  mpf_sqrt(r.get_mpf_t(), r.get_mpf_t());
  return r;
}

std::complex<double> to_complex_double(const BigComplex& z) {
  return {z.re.get_d(), z.im.get_d()};
}

std::vector<BigComplex> complex_roots(const RationalPoly& p, int precision_bits) {
  if (precision_bits < 8) throw std::invalid_argument("precision must be at least 8 bits");
  if (p.degree() < 1) throw std::domain_error("root finding needs degree >= 1");
  const int prec = precision_bits + 64;
  const int n = p.degree();

  // Monic mpf coefficients.
  std::vector<BigComplex> coeffs(n + 1, make_bc(prec));
  for (int i = 0; i <= n; ++i) {
    Rational c = p.coeff(i) / p.leading();
    mpf_class num(c.get_num(), prec), den(c.get_den(), prec);
    coeffs[i].re = num / den;
  }

  // Cauchy bound for the root radius.
  mpf_class radius(1, prec);
  for (int i = 0; i < n; ++i) {
    mpf_class a(0, prec);
    mpf_abs(a.get_mpf_t(), coeffs[i].re.get_mpf_t());
    a += 1;
    if (a > radius) radius = a;
  }

  // Seeds: radius-scaled powers of a non-real unit avoid symmetric stalls.
  std::vector<BigComplex> z(n, make_bc(prec));
  BigComplex seed = make_bc(prec);
  seed.re = mpf_class("0.4", prec);
  seed.im = mpf_class("0.9", prec);
  BigComplex acc = make_bc(prec);
  acc.re = 1;
  for (int k = 0; k < n; ++k) {
    acc = mul(acc, seed, prec);
    z[k].re = acc.re * radius;
    z[k].im = acc.im * radius;
  }

  mpf_class step_tol(0, prec);
  mpf_div_2exp(step_tol.get_mpf_t(), mpf_class(1, prec).get_mpf_t(),
               static_cast<unsigned long>(precision_bits + 8));

  const int max_iter = 2000;
  for (int iter = 0; iter < max_iter; ++iter) {
    mpf_class max_step(0, prec);
    for (int k = 0; k < n; ++k) {
      BigComplex denom = make_bc(prec);
      denom.re = 1;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        denom = mul(denom, sub(z[k], z[j], prec), prec);
      }
      BigComplex delta = div(eval_poly(coeffs, z[k], prec), denom, prec);
      z[k] = sub(z[k], delta, prec);
      mpf_class s = abs2(delta, prec);
      if (s > max_step) max_step = s;
    }
    mpf_class tol2(0, prec);
    tol2 = step_tol * step_tol;
    if (max_step < tol2) break;
  }

  // Residual gate: |p(z)| must be below 2^-(precision_bits/2) * (1 + sum|coeff|).
  mpf_class scale(1, prec);
  for (int i = 0; i <= n; ++i) {
    mpf_class a(0, prec);
    mpf_abs(a.get_mpf_t(), coeffs[i].re.get_mpf_t());
    scale += a;
  }
  mpf_class gate(0, prec);
  mpf_div_2exp(gate.get_mpf_t(), scale.get_mpf_t(),
               static_cast<unsigned long>(precision_bits / 2));
  for (int k = 0; k < n; ++k) {
    mpf_class resid = abs_value(eval_poly(coeffs, z[k], prec));
    if (!(resid < gate)) throw std::runtime_error("root iteration failed residual check");
  }

  std::sort(z.begin(), z.end(), [](const BigComplex& a, const BigComplex& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
  });
  return z;
}

std::vector<BigComplex> complex_embeddings(const NFElem& e, int precision_bits) {
  const int prec = precision_bits + 64;
  std::vector<BigComplex> roots = complex_roots(e.field()->poly(), precision_bits);
  std::vector<BigComplex> out;
  out.reserve(roots.size());
  for (const BigComplex& r : roots) {
    BigComplex acc = make_bc(prec);
    for (int i = e.rep().degree(); i >= 0; --i) {
      acc = mul(acc, r, prec);
      Rational c = e.rep().coeff(i);
      mpf_class num(c.get_num(), prec), den(c.get_den(), prec);
      BigComplex cc = make_bc(prec);
      cc.re = num / den;
      acc = add(acc, cc, prec);
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace twistkit
