#pragma once

#include <optional>

#include "twistkit/number_field.hpp"
#include "twistkit/unit_group.hpp"

namespace twistkit {

// Dirichlet character mod N with values in a number field, stored by its
// values on the canonical generators of (Z/N)^*. Construction validates that
// each value's multiplicative order divides the corresponding generator order.
class DirichletCharacter {
 public:
  DirichletCharacter(UnitGroup group, NumberFieldPtr value_field, std::vector<NFElem> gen_values);
  static DirichletCharacter trivial(long N, NumberFieldPtr value_field);

  long modulus() const { return group_.modulus(); }
  const UnitGroup& group() const { return group_; }
  const NumberFieldPtr& value_field() const { return field_; }
  const std::vector<NFElem>& gen_values() const { return values_; }

  // chi(n); zero of the value field when gcd(n, N) > 1.
  NFElem evaluate(long n) const;

  bool is_trivial() const;
  long order() const;      // lcm of the generator value orders
  long conductor() const;  // smallest modulus through which chi factors

  DirichletCharacter primitivize() const;     // the character mod conductor()
  DirichletCharacter induce(long M) const;    // requires conductor() | M
  DirichletCharacter times(const DirichletCharacter& o) const;  // modulus lcm
  DirichletCharacter power(long e) const;
  DirichletCharacter apply_galois(const FieldAutomorphism& sigma) const;
  DirichletCharacter change_field(const FieldEmbedding& emb) const;

  // Same modulus, same value field presentation, same values everywhere.
  bool equals(const DirichletCharacter& o) const;
  // Equality of the underlying primitive characters.
  bool same_primitive(const DirichletCharacter& o) const;

 private:
  UnitGroup group_;
  NumberFieldPtr field_;
  std::vector<NFElem> values_;
};

// All characters mod N of order dividing 2, valued in the given field.
// Includes the trivial character (first).
std::vector<DirichletCharacter> quadratic_characters(long N, const NumberFieldPtr& field);

struct Theorem1Report {
  bool parity_ok = false;          // |genus - weight| is odd
  bool order_element_ok = false;   // (Z/N)^* has an element of order 2*genus
  std::optional<long> witness;     // order-2g unit, preferring a^g = -1 mod N
  bool witness_power_identity = false;  // witness^genus = -1 (mod N)
  bool hypotheses_ok() const { return parity_ok && order_element_ok; }
};

Theorem1Report theorem1_hypotheses(int genus, int weight, long N);

// Smallest unit a mod N with order exactly 2*genus, a^genus = -1 (mod N),
// and psi(a) = (-1)^(weight - genus + 1); nullopt when no unit qualifies.
std::optional<long> find_sigma(long N, int genus, int weight, const DirichletCharacter& psi);

}  // namespace twistkit
