#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistkit/character.hpp"
#include "twistkit/eigensystem.hpp"
#include "twistkit/number_field.hpp"

namespace twistkit {

// A self-twist pair (gamma, chi): gamma(a_p) = chi(p) a_p for every usable
// prime (p coprime to the level, a_p != 0). The character is stored primitive.
struct InnerTwist {
  FieldAutomorphism automorphism;
  DirichletCharacter character;
  std::vector<long> verified_primes;
};

// The detected group of self-twists of one eigen-system (or of a lift).
struct TwistGroup {
  std::string base_label;
  long level = 1;
  long prime_bound = 0;
  NumberFieldPtr field;
  std::vector<InnerTwist> elements;
  // Automorphisms for which the data could neither confirm nor refute a
  // twist (some residue class was hit by fewer than 3 usable primes).
  std::vector<FieldAutomorphism> inconclusive;
  // Whether |Aut(field)| equals the degree; when false, automorphism search
  // does not see the full set of conjugates and reports should say so.
  bool field_galois = true;

  const InnerTwist* find(const FieldAutomorphism& g) const;
  bool contains_identity() const;
};

// Searches every automorphism of the Hecke field for a character chi mod one
// of the candidate moduli with gamma(a_p) = chi(p) a_p at all usable primes
// p <= prime_bound. A candidate modulus is accepted only when every unit
// residue class is hit by at least 3 usable primes and the class ratios are
// consistent and multiplicative; starved-but-consistent moduli leave the
// automorphism in the inconclusive list instead of the group.
TwistGroup detect_inner_twists(const EigenSystem& E, const std::vector<long>& modulus_candidates,
                               long prime_bound);
// Default candidate moduli: divisors of the level, or of its square when
// wide_moduli is set.
TwistGroup detect_inner_twists(const EigenSystem& E, long prime_bound, bool wide_moduli = false);

std::vector<long> divisors_of(long n);

struct UniquenessReport {
  bool equal = false;                 // chi1 and chi2 agree as primitive characters
  std::optional<long> witness_prime;  // usable prime where exactly one can twist
};

// The twisting character attached to one automorphism is unique: either the
// two candidates have equal primitivizations, or some usable prime with
// a_p != 0 separates them (at most one matches gamma(a_p)/a_p there).
UniquenessReport verify_uniqueness(const EigenSystem& E, const FieldAutomorphism& gamma,
                                   const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                                   long prime_bound);

// chi_{gamma delta}(p) = chi_gamma(p) * gamma(chi_delta(p)) for every pair in
// the group and every prime p <= prime_bound coprime to the level; also
// demands closure (gamma delta present in the group).
bool cocycle_check(const TwistGroup& T);

// chi_gamma(p)^2 eps(p) = gamma(eps(p)) at every usable prime, eps the
// nebentypus: the determinant of the twist relation.
bool determinant_relation_check(const EigenSystem& E, const TwistGroup& T);

struct CmResult {
  enum class Kind { none, inconclusive, cm } kind = Kind::none;
  std::optional<DirichletCharacter> character;  // set when kind == cm
  std::vector<std::string> notes;
};

// CM = a nontrivial quadratic self-twist: a nontrivial quadratic character
// eps mod a divisor of the level with a_p = 0 at every p <= bound where
// eps(p) = -1. Requires at least 3 such vanishing witnesses to say "cm";
// a consistent pattern with fewer witnesses is "inconclusive".
CmResult is_cm(const EigenSystem& E, long prime_bound);

struct FixedFieldResult {
  NumberFieldPtr field;       // abstract presentation of the fixed subfield
  NFElem generator_in_ambient;
  // Every a_p^2 / eps(p) at usable primes was checked to lie in the subfield.
  bool trace_data_inside = true;
};

// Subfield of the Hecke field fixed pointwise by every automorphism of the
// group, generated by the group-averaged power sums of the field generator.
FixedFieldResult fixed_field(const EigenSystem& E, const TwistGroup& T);

// Builds an eigen-system over K with exactly the prescribed self-twists:
// a_p is the equivariant projection sum_gamma chi_gamma(p) gamma(beta_p) of a
// seeded random draw beta_p, rescaled into the eigenvalue bound and redrawn
// whenever the projection vanishes. Prescribed pairs must form a group under
// composition with quadratic characters (values +-1) whose moduli divide N;
// the nebentypus is trivial. Deterministic in the seed.
EigenSystem generate_synthetic(const NumberFieldPtr& K,
                               const std::vector<std::pair<FieldAutomorphism, DirichletCharacter>>& prescribed,
                               long N, int weight, long prime_bound, unsigned long long seed);

}  // namespace twistkit
