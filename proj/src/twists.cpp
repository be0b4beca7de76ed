#include "twistkit/twists.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "twistkit/embeddings.hpp"

namespace twistkit {

namespace {

// Usable primes: coprime to the level, eigenvalue present and nonzero.
std::vector<long> usable_primes(const EigenSystem& E, long bound) {
  std::vector<long> out;
  for (long p : primes_up_to(std::min(bound, E.prime_bound())))
    if (E.level() % p != 0 && E.has_ap(p) && !E.ap_at(p).is_zero()) out.push_back(p);
  return out;
}

long class_rep(long p, long M) { return M == 1 ? 1 : p % M; }

// Attempts to realize the ratio map p -> ratios[p] as a Dirichlet character
// mod M. Returns the character when every unit class mod M has at least
// min_class_primes witnesses, ratios are constant on classes, and the class
// values are multiplicative. Sets starved when the only obstruction is
// missing data.
std::optional<DirichletCharacter> character_from_ratios(
    const std::vector<long>& primes, const std::map<long, NFElem>& ratios, long M,
    const NumberFieldPtr& K, int min_class_primes, bool& starved) {
  starved = false;
  UnitGroup U = UnitGroup::of(M);
  std::map<long, NFElem> class_value;
  std::map<long, int> class_count;
  for (long p : primes) {
    long c = class_rep(p, M);
    auto it = class_value.find(c);
    const NFElem& r = ratios.at(p);
    if (it == class_value.end())
      class_value.emplace(c, r);
    else if (!(it->second == r))
      return std::nullopt;  // two primes in one class disagree: M refuted
    class_count[c]++;
  }
  for (long u : U.units())
    if (class_count[u] < min_class_primes) {
      starved = true;
      return std::nullopt;
    }
  // Reconstruct from the canonical generators and confirm multiplicativity
  // against every observed class.
  std::vector<NFElem> gen_values;
  gen_values.reserve(U.gens().size());
  for (long g : U.gens()) gen_values.push_back(class_value.at(class_rep(g, M)));
  try {
    DirichletCharacter chi(U, K, std::move(gen_values));
    for (const auto& [c, v] : class_value)
      if (!(chi.evaluate(c) == v)) return std::nullopt;
    return chi;
  } catch (const std::invalid_argument&) {
    return std::nullopt;  // class values are not multiplicative of finite order
  }
}

}  // namespace

const InnerTwist* TwistGroup::find(const FieldAutomorphism& g) const {
  for (const auto& t : elements)
    if (t.automorphism == g) return &t;
  return nullptr;
}

bool TwistGroup::contains_identity() const {
  for (const auto& t : elements)
    if (t.automorphism.is_identity() && t.character.is_trivial()) return true;
  return false;
}

std::vector<long> divisors_of(long n) {
  if (n <= 0) throw std::invalid_argument("divisors of a nonpositive number");
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

TwistGroup detect_inner_twists(const EigenSystem& E, const std::vector<long>& modulus_candidates,
                               long prime_bound) {
  if (modulus_candidates.empty()) throw std::invalid_argument("no candidate moduli supplied");
  std::vector<long> moduli = modulus_candidates;
  std::sort(moduli.begin(), moduli.end());
  moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());

  const NumberFieldPtr& K = E.hecke_field();
  TwistGroup T;
  T.base_label = E.label();
  T.level = E.level();
  T.prime_bound = prime_bound;
  T.field = K;
  auto auts = field_automorphisms(K);
  T.field_galois = static_cast<int>(auts.size()) == K->degree();

  std::vector<long> usable = usable_primes(E, prime_bound);
  constexpr int kMinClassPrimes = 3;

  for (const auto& gamma : auts) {
    if (gamma.is_identity()) {
      // gamma(a_p) = a_p holds with the trivial character by definition.
      T.elements.push_back({gamma, DirichletCharacter::trivial(1, K), usable});
      continue;
    }
    std::map<long, NFElem> ratios;
    for (long p : usable) ratios.emplace(p, gamma(E.ap_at(p)) / E.ap_at(p));
    bool starved_somewhere = false;
    bool found = false;
    for (long M : moduli) {
      bool starved = false;
      auto chi = character_from_ratios(usable, ratios, M, K, kMinClassPrimes, starved);
      if (starved) starved_somewhere = true;
      if (!chi) continue;
      T.elements.push_back({gamma, chi->primitivize(), usable});
      found = true;
      break;
    }
    if (!found && starved_somewhere) T.inconclusive.push_back(gamma);
  }
  return T;
}

TwistGroup detect_inner_twists(const EigenSystem& E, long prime_bound, bool wide_moduli) {
  long base = E.level();
  std::vector<long> moduli = divisors_of(wide_moduli ? base * base : base);
  return detect_inner_twists(E, moduli, prime_bound);
}

UniquenessReport verify_uniqueness(const EigenSystem& E, const FieldAutomorphism& gamma,
                                   const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                                   long prime_bound) {
  (void)gamma;
  UniquenessReport rep;
  rep.equal = chi1.same_primitive(chi2);
  if (rep.equal) return rep;
  // Exhibit a usable prime separating the two characters: since gamma(a_p)
  // equals chi(p) a_p for a genuine twist and a_p != 0 there, at most one of
  // the two can satisfy the relation at the witness.
  for (long p : usable_primes(E, prime_bound)) {
    if (std::gcd(p, chi1.modulus()) != 1 || std::gcd(p, chi2.modulus()) != 1) continue;
    if (!(chi1.evaluate(p) == chi2.evaluate(p))) {
      rep.witness_prime = p;
      break;
    }
  }
  return rep;
}

bool cocycle_check(const TwistGroup& T) {
  auto primes = primes_up_to(T.prime_bound);
  for (const auto& a : T.elements)
    for (const auto& b : T.elements) {
      FieldAutomorphism ab = a.automorphism.compose(b.automorphism);
      const InnerTwist* c = T.find(ab);
      if (!c) return false;  // not closed under composition
      for (long p : primes) {
        if (std::gcd(p, T.level) != 1) continue;
        NFElem lhs = c->character.evaluate(p);
        NFElem rhs = a.character.evaluate(p) * a.automorphism(b.character.evaluate(p));
        if (!(lhs == rhs)) return false;
      }
    }
  return true;
}

bool determinant_relation_check(const EigenSystem& E, const TwistGroup& T) {
  const DirichletCharacter& eps = E.nebentypus();
  for (const auto& t : T.elements)
    for (long p : usable_primes(E, T.prime_bound)) {
      NFElem chi_p = t.character.evaluate(p);
      NFElem lhs = chi_p * chi_p * eps.evaluate(p);
      NFElem rhs = t.automorphism(eps.evaluate(p));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

CmResult is_cm(const EigenSystem& E, long prime_bound) {
  CmResult res;
  const NumberFieldPtr& K = E.hecke_field();
  std::vector<long> primes;
  for (long p : primes_up_to(std::min(prime_bound, E.prime_bound())))
    if (E.level() % p != 0 && E.has_ap(p)) primes.push_back(p);
  bool any_starved = false;
  for (const auto& eps : quadratic_characters(E.level(), K)) {
    if (eps.conductor() == 1) continue;  // self-twist by the trivial character is vacuous
    std::vector<long> vanishing_witnesses;
    bool refuted = false;
    for (long p : primes) {
      NFElem v = eps.evaluate(p);
      if (v.is_one()) continue;
      if (E.ap_at(p).is_zero()) {
        vanishing_witnesses.push_back(p);
      } else {
        refuted = true;
        break;
      }
    }
    if (refuted) continue;
    if (static_cast<long>(vanishing_witnesses.size()) >= 3) {
      res.kind = CmResult::Kind::cm;
      res.character = eps.primitivize();
      std::ostringstream os;
      os << "a_p vanishes at all " << vanishing_witnesses.size()
         << " inert primes of the conductor-" << eps.conductor() << " character";
      res.notes.push_back(os.str());
      return res;
    }
    any_starved = true;
    std::ostringstream os;
    os << "conductor-" << eps.conductor() << " character consistent but only "
       << vanishing_witnesses.size() << " vanishing witnesses";
    res.notes.push_back(os.str());
  }
  res.kind = any_starved ? CmResult::Kind::inconclusive : CmResult::Kind::none;
  return res;
}

FixedFieldResult fixed_field(const EigenSystem& E, const TwistGroup& T) {
  const NumberFieldPtr& K = E.hecke_field();
  // Group-averaged power sums generate the fixed field: the trace form of a
  // separable extension is surjective onto the fixed field, and the power
  // basis spans K over Q.
  std::vector<NFElem> traces;
  for (int i = 1; i < K->degree(); ++i) {
    NFElem power = K->generator().pow(i);
    NFElem s = K->zero();
    for (const auto& t : T.elements) s = s + t.automorphism(power);
    traces.push_back(s);
  }
  SubfieldResult sub = subfield_generated(K, traces);
  FixedFieldResult out{sub.subfield, sub.generator_image, true};
  const DirichletCharacter& eps = E.nebentypus();
  for (long p : usable_primes(E, T.prime_bound)) {
    NFElem e = E.ap_at(p) * E.ap_at(p) / eps.evaluate(p);
    if (!express_in_powers(e, out.generator_in_ambient)) {
      out.trace_data_inside = false;
      break;
    }
  }
  return out;
}

EigenSystem generate_synthetic(
    const NumberFieldPtr& K,
    const std::vector<std::pair<FieldAutomorphism, DirichletCharacter>>& prescribed, long N,
    int weight, long prime_bound, unsigned long long seed) {
  if (prescribed.empty()) throw std::invalid_argument("prescribed set must contain the identity");
  // Validate the prescribed data: quadratic characters with moduli dividing
  // the level, identity present, closure with multiplicative characters.
  bool has_identity = false;
  for (const auto& [g, chi] : prescribed) {
    if (!g.field()->same_field(*K))
      throw std::invalid_argument("prescribed automorphism acts on the wrong field");
    if (chi.order() > 2) throw std::invalid_argument("prescribed characters must be quadratic");
    if (N % chi.modulus() != 0)
      throw std::invalid_argument("prescribed character modulus must divide the level");
    if (g.is_identity()) {
      if (!chi.primitivize().is_trivial())
        throw std::invalid_argument("identity must pair with the trivial character");
      has_identity = true;
    }
  }
  if (!has_identity) throw std::invalid_argument("prescribed set must contain the identity");
  auto find_pair = [&](const FieldAutomorphism& g) -> const DirichletCharacter* {
    for (const auto& [h, chi] : prescribed)
      if (h == g) return &chi;
    return nullptr;
  };
  for (const auto& [g, cg] : prescribed)
    for (const auto& [h, ch] : prescribed) {
      const DirichletCharacter* comp = find_pair(g.compose(h));
      if (!comp) throw std::invalid_argument("prescribed set is not closed under composition");
      if (!comp->same_primitive(cg.times(ch)))
        throw std::invalid_argument("prescribed characters are not multiplicative");
    }

  std::mt19937_64 rng(seed);
  // Hand-rolled small-integer draw: engine output reduced mod 7, shifted to
  // [-3, 3]. Deterministic across platforms, unlike distribution adapters.
  auto draw = [&rng]() { return static_cast<long>(rng() % 7) - 3; };
  auto draw_element = [&]() {
    std::vector<Rational> c(K->degree());
    for (auto& x : c) x = draw();
    return K->element(RationalPoly(std::move(c)));
  };

  auto roots = complex_roots(K->poly(), 128);
  std::vector<std::complex<double>> embed;
  embed.reserve(roots.size());
  for (const auto& r : roots) embed.push_back(to_complex_double(r));
  auto max_abs = [&](const NFElem& e) {
    double best = 0.0;
    for (const auto& root : embed) {
      std::complex<double> v(0.0, 0.0);
      const auto& rep = e.rep().coeffs();
      for (auto it = rep.rbegin(); it != rep.rend(); ++it) v = v * root + it->get_d();
      best = std::max(best, std::abs(v));
    }
    return best;
  };

  std::map<long, NFElem> ap, ap2;
  for (long p : primes_up_to(prime_bound)) {
    NFElem a = K->zero();
    if (N % p == 0) {
      a = draw_element();
    } else {
      do {
        NFElem beta = draw_element();
        a = K->zero();
        for (const auto& [g, chi] : prescribed) {
          Rational sign = chi.evaluate(p).as_rational();
          a = a + g(beta) * K->from_rational(sign);
        }
      } while (a.is_zero());
      double cap = 0.9 * 2.0 * std::pow(static_cast<double>(p), (weight - 1) / 2.0);
      double mag = max_abs(a);
      if (mag > cap) {
        int halvings = static_cast<int>(std::ceil(std::log2(mag / cap)));
        Integer denom(1);
        denom <<= halvings;
        a = a * K->from_rational(Rational(1, denom));
      }
    }
    ap.emplace(p, a);
    // Hecke recursion with trivial nebentypus: eps(p) = 1 off the level, 0 on it.
    Integer pk(1);
    for (int i = 0; i + 1 < weight; ++i) pk *= p;
    NFElem eps_term = (N % p == 0) ? K->zero() : K->from_rational(Rational(pk));
    ap2.emplace(p, a * a - eps_term);
  }

  std::ostringstream label;
  label << "synthetic-N" << N << "-k" << weight << "-seed" << seed;
  return EigenSystem(label.str(), N, weight, DirichletCharacter::trivial(N, K), K, std::move(ap),
                     std::move(ap2));
}

}  // namespace twistkit
