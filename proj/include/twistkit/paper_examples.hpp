#pragma once

#include <string>
#include <vector>

#include "twistkit/json_io.hpp"

namespace twistkit {

// One named verification outcome inside a worked-example report.
struct ExampleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExampleReport {
  std::string example;  // "level-30" or "level-100"
  std::vector<ExampleCheck> checks;
  // Structured, deterministic comparison of the computed trace / full Hecke
  // fields of the lift against the documented reference values.
  io::Json comparison;

  bool all_pass() const;
  io::Json to_json() const;
};

// Verifies the bundled level-30 pair end to end: the attested character data
// (conductor 15, order 4, the values at 7 and 11), the listed coefficients,
// the order-4 unit witness mod 30, exact membership of the eigenvalue traces
// in the subfield generated by zeta8 + zeta8^3 (minimal polynomial x^2 + 2),
// twist detection on both factors, lift construction, and the strict
// inclusion of the lift's trace field in the degree-4 coefficient field.
ExampleReport verify_level30(const std::string& fixtures_dir, long bound = 100);

// Verifies the bundled level-100 pair: conductor 20, irreducibility of
// x^8 - 7x^4 + 16, the quadratic x^2 - 7x + 16 satisfied by mu^4, |mu| =
// sqrt(2) numerically, the exact vanishing a_2 + b_2 = 0, twist detection,
// lift construction, and that every computed eigenvalue trace lies in a
// quadratic field of discriminant -15 (the documented Q(sqrt(-15))).
ExampleReport verify_level100(const std::string& fixtures_dir, long bound = 100);

// True when m is monic quadratic and Q[x]/(m) is the quadratic field of the
// given squarefree discriminant (disc(m) / target is a nonzero rational
// square).
bool quadratic_field_has_discriminant(const RationalPoly& m, long target);

}  // namespace twistkit
