#pragma once

#include <vector>

namespace twistkit {

// Structure of (Z/N)^* as a product of cyclic groups with explicit generators.
// Each odd prime power factor contributes one generator (smallest primitive
// root, lifted by CRT); 2^e contributes none (e = 1), the class of -1 (e = 2),
// or the pair (-1, 5) (e >= 3). Generators are ordered by the prime they sit
// over, 2 first.
class UnitGroup {
 public:
  static UnitGroup of(long N);  // N >= 1

  long modulus() const { return n_; }
  const std::vector<long>& gens() const { return gens_; }
  const std::vector<long>& orders() const { return orders_; }
  long phi() const;

  bool is_unit(long n) const;
  // Componentwise discrete logarithm of n in the generator basis.
  // Requires gcd(n, N) = 1.
  std::vector<long> exponents(long n) const;
  long element_order(long n) const;
  std::vector<long> units() const;  // ascending representatives in [1, N]

 private:
  long reduce(long n) const;  // canonical residue; N = 1 collapses to 1
  long n_ = 1;
  std::vector<long> gens_;
  std::vector<long> orders_;
  std::vector<std::vector<long>> table_;  // exponent tuples indexed by residue
  std::vector<bool> unit_mask_;
};

long power_mod(long base, long exp, long modulus);

}  // namespace twistkit
