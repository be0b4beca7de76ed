#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "twistkit/character.hpp"
#include "twistkit/eigensystem.hpp"
#include "twistkit/exact_matrix.hpp"
#include "twistkit/fourier.hpp"
#include "twistkit/number_field.hpp"
#include "twistkit/twists.hpp"
#include "twistkit/yoshida.hpp"

namespace twistkit::io {

// Insertion-ordered documents so that emitted reports are byte-stable.
using Json = nlohmann::ordered_json;

// Schema identifiers stamped into every emitted report document.
inline constexpr const char* kReportSchema = "twistkit-report/1";
inline constexpr const char* kLiftSchema = "twistkit-lift/1";

// Rationals are strings "a/b" (or "a" when the denominator is 1); integer
// JSON values are accepted on input. Polynomials and field elements are
// arrays of rationals, constant coefficient first, trailing zeros trimmed.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json poly_to_json(const RationalPoly& p);
RationalPoly poly_from_json(const Json& j);

// Number fields: {"poly": [c0, c1, ...]} with a monic irreducible polynomial.
Json field_to_json(const NumberFieldPtr& K);
NumberFieldPtr field_from_json(const Json& j);

Json elem_to_json(const NFElem& e);
NFElem elem_from_json(const Json& j, const NumberFieldPtr& K);

// Characters: {"modulus": N, "gens": [...], "values": [...], "value_field":
// {...}}. Any valid generating set of (Z/N)* is accepted; values are
// re-expressed on the canonical generators, and the supplied table is
// verified against the reconstruction. Emission always uses canonical
// generators. The two-argument loader forces the given field presentation.
Json character_to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const Json& j);
DirichletCharacter character_from_json(const Json& j, const NumberFieldPtr& K);

// Eigen-systems: {"label", "level", "weight", "char", "field", "ap": {"2":
// [...], ...}, "apsq": {"4": [...], ...}}. The apsq keys are the prime
// squares; internally the map is keyed by the prime.
Json eigensystem_to_json(const EigenSystem& E);
EigenSystem eigensystem_from_json(const Json& j);

// Rational matrices as row-major nested arrays.
Json matrix_to_json(const RationalMatrix& M);
RationalMatrix matrix_from_json(const Json& j);

// Truncated expansions: {"genus", "bound", "field", "terms": [{"A": [[...]],
// "t": [...]}, ...]} with the index matrices in canonical order.
Json expansion_to_json(const SiegelFourierExpansion& F);
SiegelFourierExpansion expansion_from_json(const Json& j);

// Lift documents embed both factor eigen-systems verbatim (plus the computed
// spin data for inspection); loading re-runs the construction on the factors
// so every derived field is consistent by construction.
Json lift_to_json(const YoshidaLift& Y);
YoshidaLift lift_from_json(const Json& j);

// Report fragments.
Json subfield_to_json(const SubfieldResult& S);
Json twist_group_to_json(const TwistGroup& T);
Json check_report_to_json(const CheckReport& r);

// Whole-file helpers; read errors and parse errors surface as
// std::invalid_argument with the offending path in the message.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace twistkit::io
