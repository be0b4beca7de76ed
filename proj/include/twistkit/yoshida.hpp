#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistkit/eigensystem.hpp"
#include "twistkit/twists.hpp"

namespace twistkit {

enum class DiscreteSeriesStatus { yes, no, unknown };

// Admissibility report for forming the lift of a pair of eigen-systems.
struct ConditionReport {
  bool not_scalar_multiple = false;
  bool same_primitive_character = false;
  // strict: exactly one weight is 2 and the other is even and larger.
  // relaxed: both weights even and >= 2 (admits equal weights).
  bool weight_strict_ok = false;
  bool weight_relaxed_ok = false;
  // Not decidable from eigenvalue data; "yes" only when asserted by the caller.
  DiscreteSeriesStatus discrete_series = DiscreteSeriesStatus::unknown;
  std::vector<std::string> notes;

  bool lift_admissible() const {
    return not_scalar_multiple && same_primitive_character &&
           (weight_strict_ok || weight_relaxed_ok);
  }
};

ConditionReport check_conditions(const EigenSystem& left, const EigenSystem& right,
                                 bool assert_discrete_series = false);

// A lift of a pair of eigen-systems to degree-4 spin data: for each prime p
// coprime to both levels,
//   spin(p) = (x^2 - a_p x + chi(p) p^{k1-1}) (x^2 - b_p x + chi(p) p^{k2-1})
// over the compositum of the two coefficient fields, chi the common
// primitive nebentypus.
struct YoshidaLift {
  EigenSystem left, right;
  CompositumResult compositum;
  long prime_bound = 0;
  std::map<long, NFElem> left_eigen;   // a_p embedded in the compositum
  std::map<long, NFElem> right_eigen;  // b_p embedded in the compositum
  std::map<long, NFElem> char_values;  // chi(p) embedded in the compositum
  std::map<long, NFPoly> spin_polys;   // monic degree 4
  std::vector<std::string> notes;
};

// Constructs the lift; throws std::domain_error with a diagnostic when the
// pair is inadmissible (scalar multiples, different primitive characters, or
// a weight pair failing both the strict and the relaxed rule; relaxed-only
// admission is recorded as a note).
YoshidaLift build_lift(const EigenSystem& left, const EigenSystem& right, long prime_bound);

// Subfield of the compositum generated by the eigenvalue traces a_p + b_p.
SubfieldResult trace_field(const YoshidaLift& Y, long prime_bound);

// Subfield generated by every coefficient of every spin polynomial.
SubfieldResult full_hecke_field(const YoshidaLift& Y, long prime_bound);

// The degree-4 twist: coefficient of x^i scales by s^{4-i} (root scaling by s).
NFPoly twist_quartic(const NFPoly& q, const NFElem& s);

// All pairs (gamma, chi) with gamma in Aut(compositum) and, for every prime
// with a spin polynomial, gamma(spin(p)) equal to the chi(p)-twist of
// spin(p). Unlike an eigen-system's group, one automorphism may carry
// several characters (e.g. a factor-swapping automorphism pairs with the
// trivial character and with the common self-twist character at once).
// Candidate moduli: divisors of lcm of the levels, or of its square.
TwistGroup lift_twist_group(const YoshidaLift& Y, long prime_bound, bool wide_moduli = false);

struct ContainmentReport {
  bool checked = false;    // factors share one field presentation
  bool contained = false;  // every common twist of the factors appears in the lift group
  std::vector<std::string> notes;
};

// Verifies the containment (lift twist group) >= (common twists of the two
// factors); only checkable when both factors use one field presentation.
ContainmentReport common_twist_containment(const TwistGroup& lift_group, const TwistGroup& left,
                                           const TwistGroup& right);

// The characteristic-polynomial identity behind the lifting theorem: given a
// pair (gamma, chi) twisting BOTH factors (precondition, else
// std::domain_error naming the failing side), checks that gamma applied to
// every spin polynomial equals its chi(p)-twist. Both factors must share one
// field presentation.
bool verify_theorem2(const EigenSystem& left, const EigenSystem& right,
                     const FieldAutomorphism& gamma, const DirichletCharacter& chi,
                     long prime_bound);

}  // namespace twistkit
