#include "twistkit/yoshida.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twistkit {

namespace {

// Primes usable for pair comparisons: coprime to both levels, eigenvalues
// available on both sides.
std::vector<long> common_good_primes(const EigenSystem& a, const EigenSystem& b, long bound) {
  long eff = std::min({bound, a.prime_bound(), b.prime_bound()});
  std::vector<long> out;
  for (long p : primes_up_to(eff))
    if (a.level() % p != 0 && b.level() % p != 0) out.push_back(p);
  return out;
}

// chi(p) p^{k-1} as an element of the lift's field.
NFElem quadratic_constant(const NFElem& chi_p, long p, int weight) {
  Integer pk(1);
  for (int i = 0; i + 1 < weight; ++i) pk *= p;
  return chi_p * chi_p.field()->from_rational(Rational(pk));
}

NFPoly quadratic_factor(const NFElem& eigen, const NFElem& chi_p, long p, int weight) {
  const NumberFieldPtr& K = eigen.field();
  return NFPoly(K, {quadratic_constant(chi_p, p, weight), -eigen, K->one()});
}

// All s with gamma(q) = twist_quartic(q, s), for a monic quartic q. The
// lowest nonvanishing sub-leading coefficient pins s up to a root of unity
// of small order, resolved by root extraction in the field.
std::vector<NFElem> chi_candidates(const FieldAutomorphism& gamma, const NFPoly& q) {
  const NumberFieldPtr& K = q.field();
  NFPoly gq = q.map_coeffs([&](const NFElem& e) { return gamma(e); });
  std::vector<NFElem> candidates;
  NFElem c3 = q.coeff(3), c2 = q.coeff(2), c1 = q.coeff(1), c0 = q.coeff(0);
  if (!c3.is_zero()) {
    candidates.push_back(gamma(c3) / c3);
  } else if (!c1.is_zero()) {
    // s^4 = gamma(c0)/c0 and s^3 = gamma(c1)/c1 give s as their ratio.
    candidates.push_back((gamma(c0) / c0) * (c1 / gamma(c1)));
  } else if (!c2.is_zero()) {
    NFElem t = gamma(c2) / c2;
    NFPoly sq(K, {-t, K->zero(), K->one()});
    for (const auto& r : roots_in_field(sq)) candidates.push_back(r);
  } else {
    NFElem t = gamma(c0) / c0;
    NFPoly quart(K, {-t, K->zero(), K->zero(), K->zero(), K->one()});
    for (const auto& r : roots_in_field(quart)) candidates.push_back(r);
  }
  std::vector<NFElem> verified;
  for (const auto& s : candidates)
    if (!s.is_zero() && twist_quartic(q, s) == gq) verified.push_back(s);
  return verified;
}

bool vector_contains(const std::vector<NFElem>& v, const NFElem& e) {
  return std::any_of(v.begin(), v.end(), [&](const NFElem& x) { return x == e; });
}

}  // namespace

ConditionReport check_conditions(const EigenSystem& left, const EigenSystem& right,
                                 bool assert_discrete_series) {
  ConditionReport rep;

  // (1) Not a scalar multiple: the good-prime eigenvalue sequences must not
  // be proportional (compared inside the compositum).
  CompositumResult comp = compositum(left.hecke_field(), right.hecke_field());
  std::vector<long> primes = common_good_primes(left, right, std::numeric_limits<long>::max());
  bool proportional = true;
  std::optional<NFElem> scalar;
  for (long p : primes) {
    NFElem a = comp.left(left.ap_at(p));
    NFElem b = comp.right(right.ap_at(p));
    if (b.is_zero()) {
      if (!a.is_zero()) {
        proportional = false;
        break;
      }
      continue;
    }
    NFElem ratio = a / b;
    if (!scalar)
      scalar = ratio;
    else if (!(*scalar == ratio)) {
      proportional = false;
      break;
    }
  }
  if (primes.empty()) proportional = false;  // no data: refuse to call them proportional
  rep.not_scalar_multiple = !proportional;
  if (proportional) rep.notes.push_back("eigenvalue sequences are proportional on good primes");

  // (2) Same primitive nebentypus, values compared in the compositum.
  DirichletCharacter chi1 = left.nebentypus().primitivize();
  DirichletCharacter chi2 = right.nebentypus().primitivize();
  if (chi1.modulus() != chi2.modulus()) {
    rep.same_primitive_character = false;
    std::ostringstream os;
    os << "character conductors differ: " << chi1.modulus() << " vs " << chi2.modulus();
    rep.notes.push_back(os.str());
  } else {
    bool same = true;
    for (size_t i = 0; i < chi1.gen_values().size(); ++i)
      if (!(comp.left(chi1.gen_values()[i]) == comp.right(chi2.gen_values()[i]))) {
        same = false;
        break;
      }
    rep.same_primitive_character = same;
    if (!same) rep.notes.push_back("characters have equal conductor but different values");
  }

  // (3) Weight rules.
  int k1 = left.weight(), k2 = right.weight();
  int lo = std::min(k1, k2), hi = std::max(k1, k2);
  rep.weight_strict_ok = (lo == 2 && hi > 2 && hi % 2 == 0);
  rep.weight_relaxed_ok = (k1 >= 2 && k2 >= 2 && k1 % 2 == 0 && k2 % 2 == 0);
  if (!rep.weight_strict_ok && rep.weight_relaxed_ok)
    rep.notes.push_back("weights pass only the relaxed rule (both even)");

  // (4) Discrete-series behaviour at a finite place is metadata, never
  // inferred from good-prime eigenvalues.
  rep.discrete_series =
      assert_discrete_series ? DiscreteSeriesStatus::yes : DiscreteSeriesStatus::unknown;
  if (!assert_discrete_series)
    rep.notes.push_back("discrete-series condition not decidable from eigenvalue data; pass the assertion flag if known");

  return rep;
}

YoshidaLift build_lift(const EigenSystem& left, const EigenSystem& right, long prime_bound) {
  ConditionReport rep = check_conditions(left, right);
  if (!rep.same_primitive_character)
    throw std::domain_error("cannot build lift: nebentypus characters have different primitivizations");
  if (!rep.not_scalar_multiple)
    throw std::domain_error("cannot build lift: the eigen-systems are scalar multiples");
  if (!rep.weight_strict_ok && !rep.weight_relaxed_ok)
    throw std::domain_error("cannot build lift: weights fail both the strict and the relaxed rule");

  YoshidaLift Y{left, right, compositum(left.hecke_field(), right.hecke_field()), 0};
  if (!rep.weight_strict_ok)
    Y.notes.push_back("weight pair admitted under the relaxed rule (both even)");
  for (const std::string& n : rep.notes)
    if (n.rfind("discrete-series", 0) == 0) Y.notes.push_back(n);

  std::vector<long> primes = common_good_primes(left, right, prime_bound);
  Y.prime_bound = primes.empty() ? 0 : primes.back();
  for (long p : primes) {
    NFElem a = Y.compositum.left(left.ap_at(p));
    NFElem b = Y.compositum.right(right.ap_at(p));
    NFElem chi_p = Y.compositum.left(left.nebentypus().evaluate(p));
    NFPoly spin = quadratic_factor(a, chi_p, p, left.weight()) *
                  quadratic_factor(b, chi_p, p, right.weight());
    Y.left_eigen.emplace(p, std::move(a));
    Y.right_eigen.emplace(p, std::move(b));
    Y.char_values.emplace(p, std::move(chi_p));
    Y.spin_polys.emplace(p, std::move(spin));
  }
  return Y;
}

SubfieldResult trace_field(const YoshidaLift& Y, long prime_bound) {
  std::vector<NFElem> gens;
  for (const auto& [p, a] : Y.left_eigen) {
    if (p > prime_bound) break;
    gens.push_back(a + Y.right_eigen.at(p));
  }
  return subfield_generated(Y.compositum.field, gens);
}

SubfieldResult full_hecke_field(const YoshidaLift& Y, long prime_bound) {
  std::vector<NFElem> gens;
  for (const auto& [p, q] : Y.spin_polys) {
    if (p > prime_bound) break;
    for (int i = 0; i <= 3; ++i) gens.push_back(q.coeff(i));
  }
  return subfield_generated(Y.compositum.field, gens);
}

NFPoly twist_quartic(const NFPoly& q, const NFElem& s) {
  int n = q.degree();
  std::vector<NFElem> out;
  out.reserve(n + 1);
  NFElem scale = q.field()->one();
  // coefficient of x^n is untouched; x^{n-j} scales by s^j (root scaling).
  std::vector<NFElem> rev(q.coeffs().rbegin(), q.coeffs().rend());
  for (auto& c : rev) {
    c = c * scale;
    scale = scale * s;
  }
  return NFPoly(q.field(), std::vector<NFElem>(rev.rbegin(), rev.rend()));
}

TwistGroup lift_twist_group(const YoshidaLift& Y, long prime_bound, bool wide_moduli) {
  const NumberFieldPtr& K = Y.compositum.field;
  TwistGroup T;
  T.base_label = "lift(" + Y.left.label() + "," + Y.right.label() + ")";
  T.level = std::lcm(Y.left.level(), Y.right.level());
  T.prime_bound = std::min(prime_bound, Y.prime_bound);
  T.field = K;
  auto auts = field_automorphisms(K);
  T.field_galois = static_cast<int>(auts.size()) == K->degree();

  std::vector<long> usable;
  for (const auto& [p, q] : Y.spin_polys)
    if (p <= T.prime_bound) usable.push_back(p);

  std::vector<long> moduli = divisors_of(wide_moduli ? T.level * T.level : T.level);
  constexpr int kMinClassPrimes = 3;

  for (const auto& gamma : auts) {
    // Per-prime candidate twist values (independent of the modulus).
    std::map<long, std::vector<NFElem>> S;
    bool impossible = false;
    for (long p : usable) {
      auto cands = chi_candidates(gamma, Y.spin_polys.at(p));
      if (cands.empty()) {
        impossible = true;
        break;
      }
      S.emplace(p, std::move(cands));
    }
    if (impossible) continue;  // no character value can work at some prime

    bool starved_somewhere = false;
    bool found_any = false;
    std::vector<DirichletCharacter> found;
    for (long M : moduli) {
      UnitGroup U = UnitGroup::of(M);
      std::map<long, std::vector<NFElem>> class_cands;
      std::map<long, int> class_count;
      bool refuted = false;
      for (long p : usable) {
        long c = M == 1 ? 1 : p % M;
        auto it = class_cands.find(c);
        if (it == class_cands.end()) {
          class_cands.emplace(c, S.at(p));
        } else {
          std::vector<NFElem> inter;
          for (const auto& v : it->second)
            if (vector_contains(S.at(p), v)) inter.push_back(v);
          if (inter.empty()) {
            refuted = true;
            break;
          }
          it->second = std::move(inter);
        }
        class_count[c]++;
      }
      if (refuted) continue;
      bool starved = false;
      for (long u : U.units())
        if (class_count[u] < kMinClassPrimes) {
          starved = true;
          break;
        }
      if (starved) {
        starved_somewhere = true;
        continue;
      }
      // Enumerate generator-value assignments drawn from the class candidate
      // sets; each surviving assignment is a verified character.
      const auto& gens = U.gens();
      std::vector<const std::vector<NFElem>*> pools;
      size_t combos = 1;
      for (long g : gens) {
        const auto& pool = class_cands.at(M == 1 ? 1 : g % M);
        pools.push_back(&pool);
        combos *= pool.size();
      }
      if (combos > 4096) continue;  // unresolvable ambiguity; treat as no finding
      for (size_t mask = 0; mask < std::max<size_t>(combos, 1); ++mask) {
        size_t m = mask;
        std::vector<NFElem> gen_values;
        for (const auto* pool : pools) {
          gen_values.push_back((*pool)[m % pool->size()]);
          m /= pool->size();
        }
        try {
          DirichletCharacter chi(U, K, std::move(gen_values));
          bool consistent = true;
          for (const auto& [c, pool] : class_cands)
            if (!vector_contains(pool, chi.evaluate(c))) {
              consistent = false;
              break;
            }
          if (!consistent) continue;
          DirichletCharacter prim = chi.primitivize();
          bool duplicate = false;
          for (const auto& known : found)
            if (known.same_primitive(prim)) {
              duplicate = true;
              break;
            }
          if (duplicate) continue;
          found.push_back(prim);
          T.elements.push_back({gamma, std::move(prim), usable});
          found_any = true;
        } catch (const std::invalid_argument&) {
          continue;  // assignment is not multiplicative of finite order
        }
      }
    }
    if (!found_any && starved_somewhere) T.inconclusive.push_back(gamma);
  }
  return T;
}

ContainmentReport common_twist_containment(const TwistGroup& lift_group, const TwistGroup& left,
                                           const TwistGroup& right) {
  ContainmentReport rep;
  if (!left.field->same_field(*right.field) || !lift_group.field->same_field(*left.field)) {
    rep.notes.push_back(
        "containment not checked: factor fields use different presentations than the lift field");
    return rep;
  }
  rep.checked = true;
  rep.contained = true;
  for (const auto& lt : left.elements) {
    const InnerTwist* rt = nullptr;
    for (const auto& cand : right.elements)
      if (cand.automorphism == lt.automorphism &&
          cand.character.same_primitive(lt.character)) {
        rt = &cand;
        break;
      }
    if (!rt) continue;  // not a common twist
    bool present = false;
    for (const auto& yt : lift_group.elements)
      if (yt.automorphism == lt.automorphism && yt.character.same_primitive(lt.character)) {
        present = true;
        break;
      }
    if (!present) {
      rep.contained = false;
      std::ostringstream os;
      os << "common twist with character conductor " << lt.character.conductor()
         << " missing from the lift group";
      rep.notes.push_back(os.str());
    }
  }
  return rep;
}

bool verify_theorem2(const EigenSystem& left, const EigenSystem& right,
                     const FieldAutomorphism& gamma, const DirichletCharacter& chi,
                     long prime_bound) {
  const NumberFieldPtr& K = left.hecke_field();
  if (!K->same_field(*right.hecke_field()))
    throw std::invalid_argument("factors must share one field presentation");
  if (!gamma.field()->same_field(*K) || !chi.value_field()->same_field(*K))
    throw std::invalid_argument("the twist pair must live on the factors' field");

  // Precondition: (gamma, chi) twists both factors.
  auto check_factor = [&](const EigenSystem& E, const char* side) {
    for (long p : primes_up_to(std::min(prime_bound, E.prime_bound()))) {
      if (E.level() % p == 0 || std::gcd(p, chi.modulus()) != 1) continue;
      if (!(gamma(E.ap_at(p)) == chi.evaluate(p) * E.ap_at(p))) {
        std::ostringstream os;
        os << "the pair does not twist the " << side << " factor (fails at p = " << p << ")";
        throw std::domain_error(os.str());
      }
    }
  };
  check_factor(left, "left");
  check_factor(right, "right");

  // Conclusion: gamma(spin(p)) equals the chi(p)-twist of spin(p). Spin
  // polynomials are formed directly (each factor contributes its own
  // nebentypus value, which agree at good primes for admissible pairs).
  for (long p : common_good_primes(left, right, prime_bound)) {
    if (std::gcd(p, chi.modulus()) != 1) continue;
    NFPoly spin = quadratic_factor(left.ap_at(p), left.nebentypus().evaluate(p), p, left.weight()) *
                  quadratic_factor(right.ap_at(p), right.nebentypus().evaluate(p), p, right.weight());
    NFPoly gspin = spin.map_coeffs([&](const NFElem& e) { return gamma(e); });
    if (!(gspin == twist_quartic(spin, chi.evaluate(p)))) return false;
  }
  return true;
}

}  // namespace twistkit
