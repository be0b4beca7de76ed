#pragma once

// Shared property suite: generate eigen-systems with prescribed self-twist
// groups across coefficient-field degrees 2, 4, 8 and group orders 1, 2, 4,
// then demand that detection recovers each group exactly (no false positives,
// no false negatives, nothing inconclusive) and that the group identities
// (cocycle, determinant relation, closure) hold on the detected groups.
//
// Conductors are restricted to {1, 3, 4, 5, 8, 12}: every unit class of every
// divisor of those moduli is hit by at least 3 primes below 100, so detection
// below that bound can always conclude.
#include <string>
#include <utility>
#include <vector>

#include "twistkit/character.hpp"
#include "twistkit/twists.hpp"

namespace synth_suite {

using namespace twistkit;

struct Config {
  std::string name;
  NumberFieldPtr K;
  long level = 1;
  int weight = 2;
  std::vector<std::pair<FieldAutomorphism, DirichletCharacter>> pairs;
};

// The quadratic character mod m matching the given signs; throws when the
// constraints do not pin one down.
inline DirichletCharacter quad_char(long m, const NumberFieldPtr& K,
                                    const std::vector<std::pair<long, int>>& signs) {
  for (const DirichletCharacter& chi : quadratic_characters(m, K)) {
    bool match = true;
    for (const auto& [n, s] : signs)
      if (!(chi.evaluate(n) == K->from_rational(Rational(s)))) {
        match = false;
        break;
      }
    if (match) return chi;
  }
  throw std::runtime_error("no quadratic character mod " + std::to_string(m) +
                           " with the requested signs");
}

// z -> z^j on a field whose generator is a root of unity.
inline FieldAutomorphism power_automorphism(const NumberFieldPtr& K, long j) {
  return FieldAutomorphism(K, K->generator().pow(j));
}

inline std::vector<Config> suite_configs() {
  std::vector<Config> configs;

  NumberFieldPtr QI = NumberField::make(RationalPoly({Rational(1), Rational(0), Rational(1)}));
  NumberFieldPtr Z8 = NumberField::make(RationalPoly(
      {Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)}));
  NumberFieldPtr Z16 = NumberField::make(RationalPoly(
      {Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
       Rational(0), Rational(1)}));

  auto identity_pair = [](const NumberFieldPtr& K) {
    return std::make_pair(FieldAutomorphism(K, K->generator()), DirichletCharacter::trivial(1, K));
  };
  auto chi3 = [&](const NumberFieldPtr& K) { return quad_char(3, K, {{2, -1}}); };
  auto chi4 = [&](const NumberFieldPtr& K) { return quad_char(4, K, {{3, -1}}); };
  auto chi5 = [&](const NumberFieldPtr& K) { return quad_char(5, K, {{2, -1}}); };
  auto chi8 = [&](const NumberFieldPtr& K) { return quad_char(8, K, {{3, -1}, {7, 1}}); };
  auto chi8p = [&](const NumberFieldPtr& K) { return quad_char(8, K, {{3, 1}, {7, -1}}); };
  auto chi12 = [&](const NumberFieldPtr& K) {
    return quad_char(12, K, {{5, -1}, {7, -1}});  // product of the mod-3 and mod-4 characters
  };

  auto order2 = [&](std::string name, const NumberFieldPtr& K, long j, long level,
                    const DirichletCharacter& chi) {
    Config c{std::move(name), K, level, 2, {}};
    c.pairs.push_back(identity_pair(K));
    c.pairs.emplace_back(power_automorphism(K, j), chi);
    return c;
  };

  // Degree 2: Q(i), conjugation i -> -i.
  configs.push_back({"QI-none", QI, 6, 2, {identity_pair(QI)}});
  configs.push_back(order2("QI-chi3", QI, 3, 3, chi3(QI)));
  configs.push_back(order2("QI-chi4", QI, 3, 4, chi4(QI)));
  configs.push_back(order2("QI-chi5", QI, 3, 5, chi5(QI)));
  configs.push_back(order2("QI-chi8", QI, 3, 8, chi8(QI)));
  configs.push_back(order2("QI-chi8p", QI, 3, 8, chi8p(QI)));
  configs.push_back(order2("QI-chi12", QI, 3, 12, chi12(QI)));

  // Degree 4: Q(z), z^4 = -1, Galois group Klein {z, z^3, z^5, z^7}.
  configs.push_back({"Z8-none", Z8, 6, 2, {identity_pair(Z8)}});
  configs.push_back(order2("Z8-s5-chi4", Z8, 5, 4, chi4(Z8)));
  configs.push_back(order2("Z8-s3-chi8", Z8, 3, 8, chi8(Z8)));
  configs.push_back(order2("Z8-s7-chi8p", Z8, 7, 8, chi8p(Z8)));
  configs.push_back(order2("Z8-s5-chi3", Z8, 5, 3, chi3(Z8)));
  configs.push_back(order2("Z8-s3-chi5", Z8, 3, 5, chi5(Z8)));
  {
    Config c{"Z8-klein8", Z8, 8, 2, {identity_pair(Z8)}};
    c.pairs.emplace_back(power_automorphism(Z8, 3), chi8(Z8));
    c.pairs.emplace_back(power_automorphism(Z8, 5), chi4(Z8));
    c.pairs.emplace_back(power_automorphism(Z8, 7), chi8p(Z8));
    configs.push_back(c);
  }
  {
    Config c{"Z8-klein12", Z8, 12, 4, {identity_pair(Z8)}};
    c.pairs.emplace_back(power_automorphism(Z8, 5), chi4(Z8));
    c.pairs.emplace_back(power_automorphism(Z8, 7), chi3(Z8));
    c.pairs.emplace_back(power_automorphism(Z8, 3), chi12(Z8));
    configs.push_back(c);
  }

  // Degree 8: Q(w), w^8 = -1; w -> w^3 has order 4, {w, w^7, w^9, w^15} is Klein.
  configs.push_back({"Z16-none", Z16, 6, 2, {identity_pair(Z16)}});
  configs.push_back(order2("Z16-s15-chi4", Z16, 15, 4, chi4(Z16)));
  configs.push_back(order2("Z16-s9-chi8", Z16, 9, 8, chi8(Z16)));
  configs.push_back(order2("Z16-s7-chi5", Z16, 7, 5, chi5(Z16)));
  auto cyclic4 = [&](std::string name, long level, const DirichletCharacter& chi) {
    Config c{std::move(name), Z16, level, 2, {identity_pair(Z16)}};
    c.pairs.emplace_back(power_automorphism(Z16, 3), chi);
    c.pairs.emplace_back(power_automorphism(Z16, 9), DirichletCharacter::trivial(1, Z16));
    c.pairs.emplace_back(power_automorphism(Z16, 11), chi);
    return c;
  };
  configs.push_back(cyclic4("Z16-c4-chi4", 4, chi4(Z16)));
  configs.push_back(cyclic4("Z16-c4-chi8", 8, chi8(Z16)));
  configs.push_back(cyclic4("Z16-c4-chi3", 3, chi3(Z16)));
  {
    Config c{"Z16-klein8", Z16, 8, 2, {identity_pair(Z16)}};
    c.pairs.emplace_back(power_automorphism(Z16, 7), chi4(Z16));
    c.pairs.emplace_back(power_automorphism(Z16, 9), chi8(Z16));
    c.pairs.emplace_back(power_automorphism(Z16, 15), chi8p(Z16));
    configs.push_back(c);
  }
  {
    Config c{"Z16-klein12", Z16, 12, 2, {identity_pair(Z16)}};
    c.pairs.emplace_back(power_automorphism(Z16, 7), chi3(Z16));
    c.pairs.emplace_back(power_automorphism(Z16, 9), chi4(Z16));
    c.pairs.emplace_back(power_automorphism(Z16, 15), chi12(Z16));
    configs.push_back(c);
  }

  return configs;
}

// Empty string on success, otherwise a description of the first mismatch.
inline std::string check_one(const Config& cfg, unsigned long long seed, long bound) {
  EigenSystem E = generate_synthetic(cfg.K, cfg.pairs, cfg.level, cfg.weight, bound, seed);
  TwistGroup T = detect_inner_twists(E, bound);
  std::string where = cfg.name + " seed " + std::to_string(seed);
  if (!T.inconclusive.empty())
    return where + ": " + std::to_string(T.inconclusive.size()) + " inconclusive automorphisms";
  if (T.elements.size() != cfg.pairs.size())
    return where + ": detected " + std::to_string(T.elements.size()) + " twists, prescribed " +
           std::to_string(cfg.pairs.size());
  for (const auto& [gamma, chi] : cfg.pairs) {
    const InnerTwist* t = T.find(gamma);
    if (t == nullptr) return where + ": prescribed automorphism missing from the detected group";
    if (!t->character.same_primitive(chi))
      return where + ": detected character differs from the prescribed one";
  }
  if (!T.contains_identity()) return where + ": identity missing";
  if (!cocycle_check(T)) return where + ": cocycle identity failed";
  if (!determinant_relation_check(E, T)) return where + ": determinant relation failed";
  return "";
}

struct SuiteResult {
  int systems = 0;
  std::vector<std::string> failures;
  bool all_ok() const { return failures.empty(); }
};

inline SuiteResult run_suite(long bound, const std::vector<unsigned long long>& seeds) {
  SuiteResult r;
  for (const Config& cfg : suite_configs())
    for (unsigned long long seed : seeds) {
      ++r.systems;
      std::string err = check_one(cfg, seed, bound);
      if (!err.empty()) r.failures.push_back(err);
    }
  return r;
}

}  // namespace synth_suite
