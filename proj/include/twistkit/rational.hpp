#pragma once

#include <gmpxx.h>

#include <string>

namespace twistkit {

// Exact arithmetic scalars. All library math is done over these; doubles only
// appear at the analytic boundary (complex embeddings, Siegel upper half-space).
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "n" or "n/d" (d > 0 after canonicalization). Throws std::invalid_argument
// on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

// Canonical form: "n" when the denominator is 1, otherwise "n/d" with d > 0.
std::string rational_to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Floor division helpers for symmetric remainders (used by Hensel lifting).
Integer symmetric_mod(const Integer& a, const Integer& m);  // result in (-m/2, m/2]

}  // namespace twistkit
