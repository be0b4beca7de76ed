#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "twistkit/number_field.hpp"

namespace twistkit {

// Arbitrary-precision complex value; both parts carry the working precision.
struct BigComplex {
  mpf_class re, im;
};

// All complex roots of p (which must be squarefree), computed by
// Durand-Kerner iteration at precision_bits + guard bits and sorted by
// (real, imaginary). The residual |p(z)| is verified against
// 2^-(precision_bits/2) * (1 + sum |coeff|); failure throws std::runtime_error.
std::vector<BigComplex> complex_roots(const RationalPoly& p, int precision_bits);

// Images of e under all complex embeddings of its field, ordered consistently
// with complex_roots(e.field()->poly(), ...).
std::vector<BigComplex> complex_embeddings(const NFElem& e, int precision_bits);

mpf_class abs_value(const BigComplex& z);
std::complex<double> to_complex_double(const BigComplex& z);

}  // namespace twistkit
