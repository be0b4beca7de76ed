#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistkit/character.hpp"
#include "twistkit/number_field.hpp"

namespace twistkit {

// A classical eigen-system: level, weight, nebentypus, Hecke field, and
// eigenvalues a_p indexed by prime. The nebentypus is stored at modulus equal
// to the level (induced on construction if it arrives at a smaller modulus).
// Prime eigenvalue coverage must be contiguous: every prime up to the largest
// supplied one must be present.
class EigenSystem {
 public:
  EigenSystem(std::string label, long level, int weight, DirichletCharacter nebentypus,
              NumberFieldPtr hecke_field, std::map<long, NFElem> ap,
              std::map<long, NFElem> ap_squared = {});

  const std::string& label() const { return label_; }
  long level() const { return level_; }
  int weight() const { return weight_; }
  const DirichletCharacter& nebentypus() const { return neben_; }
  const NumberFieldPtr& hecke_field() const { return field_; }
  const std::map<long, NFElem>& ap() const { return ap_; }
  const std::map<long, NFElem>& ap_squared() const { return ap2_; }

  // Largest prime p with every prime q <= p present in ap().
  long prime_bound() const { return prime_bound_; }
  bool has_ap(long p) const { return ap_.find(p) != ap_.end(); }
  const NFElem& ap_at(long p) const;

  // The prime-square eigenvalue predicted by the Hecke recursion
  // a_{p^2} = a_p^2 - eps(p) p^{weight-1}; valid for p | level too, where
  // eps(p) = 0 collapses it to a_p^2.
  NFElem predicted_ap_squared(long p) const;

 private:
  std::string label_;
  long level_;
  int weight_;
  DirichletCharacter neben_;
  NumberFieldPtr field_;
  std::map<long, NFElem> ap_;
  std::map<long, NFElem> ap2_;
  long prime_bound_ = 0;
};

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

// Verifies every supplied a_{p^2} against the Hecke recursion.
CheckReport hecke_consistency(const EigenSystem& f);

// Verifies |sigma(a_p)| <= 2 p^{(weight-1)/2} with relative slack 1e-6, for
// every complex embedding sigma of the Hecke field and every p not dividing
// the level.
CheckReport ramanujan_check(const EigenSystem& f, int precision_bits = 128);

std::vector<long> primes_up_to(long bound);
bool is_prime(long n);

}  // namespace twistkit
