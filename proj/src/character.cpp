#include "twistkit/character.hpp"

#include <numeric>
#include <stdexcept>

namespace twistkit {

DirichletCharacter::DirichletCharacter(UnitGroup group, NumberFieldPtr value_field,
                                       std::vector<NFElem> gen_values)
    : group_(std::move(group)), field_(std::move(value_field)), values_(std::move(gen_values)) {
  if (values_.size() != group_.gens().size())
    throw std::invalid_argument("one value per generator required");
  for (size_t i = 0; i < values_.size(); ++i) {
    if (!field_->same_field(*values_[i].field()))
      throw std::invalid_argument("character value outside the declared field");
    auto ord = values_[i].multiplicative_order(group_.orders()[i]);
    if (!ord || group_.orders()[i] % *ord != 0)
      throw std::invalid_argument("character value order does not divide the generator order");
  }
}

DirichletCharacter DirichletCharacter::trivial(long N, NumberFieldPtr value_field) {
  UnitGroup g = UnitGroup::of(N);
  std::vector<NFElem> vals(g.gens().size(), value_field->one());
  return DirichletCharacter(std::move(g), std::move(value_field), std::move(vals));
}

NFElem DirichletCharacter::evaluate(long n) const {
  if (!group_.is_unit(n)) return field_->zero();
  std::vector<long> e = group_.exponents(n);
  NFElem acc = field_->one();
  for (size_t i = 0; i < e.size(); ++i) acc = acc * values_[i].pow(e[i]);
  return acc;
}

bool DirichletCharacter::is_trivial() const {
  for (const NFElem& v : values_)
    if (!v.is_one()) return false;
  return true;
}

long DirichletCharacter::order() const {
  long out = 1;
  for (size_t i = 0; i < values_.size(); ++i) {
    auto ord = values_[i].multiplicative_order(group_.orders()[i]);
    if (!ord) throw std::logic_error("character value is not a root of unity");
    out = std::lcm(out, *ord);
  }
  return out;
}

long DirichletCharacter::conductor() const {
  long N = modulus();
  for (long M = 1; M <= N; ++M) {
    if (N % M != 0) continue;
    bool factors_through = true;
    for (long u = 1; u < N || (N == 1 && u == 1); ++u) {
      if (!group_.is_unit(u) || u % M != 1 % M) continue;
      if (!evaluate(u).is_one()) {
        factors_through = false;
        break;
      }
      if (N == 1) break;
    }
    if (factors_through) return M;
  }
  return N;
}

DirichletCharacter DirichletCharacter::induce(long M) const {
  long c = conductor();
  if (M % c != 0)
    throw std::domain_error("cannot induce: conductor does not divide the target modulus");
  UnitGroup target = UnitGroup::of(M);
  std::vector<NFElem> vals;
  vals.reserve(target.gens().size());
  for (long g : target.gens()) {
    // g is a unit mod M; evaluate chi at any lift of g coprime to the original
    // modulus. Since the character factors through mod c and gcd(g, M) = 1 with
    // c | M, a lift of g mod lcm(M, modulus) coprime to the modulus exists.
    long N = modulus();
    long L = std::lcm(M, N);
    long lift = -1;
    for (long t = g % L; t < g % L + L; t += M) {
      long cand = t % L;
      if (cand == 0) cand = L;
      if (std::gcd(cand, N) == 1) {
        lift = cand;
        break;
      }
    }
    if (lift < 0) throw std::logic_error("no coprime lift found while inducing");
    vals.push_back(evaluate(lift));
  }
  return DirichletCharacter(std::move(target), field_, std::move(vals));
}

DirichletCharacter DirichletCharacter::primitivize() const { return induce(conductor()); }

DirichletCharacter DirichletCharacter::times(const DirichletCharacter& o) const {
  if (!field_->same_field(*o.field_))
    throw std::domain_error("character product requires a common value field");
  long L = std::lcm(modulus(), o.modulus());
  UnitGroup target = UnitGroup::of(L);
  std::vector<NFElem> vals;
  vals.reserve(target.gens().size());
  for (long g : target.gens()) vals.push_back(evaluate(g) * o.evaluate(g));
  return DirichletCharacter(std::move(target), field_, std::move(vals));
}

DirichletCharacter DirichletCharacter::power(long e) const {
  std::vector<NFElem> vals;
  vals.reserve(values_.size());
  for (const NFElem& v : values_) vals.push_back(v.pow(e));
  return DirichletCharacter(group_, field_, std::move(vals));
}

DirichletCharacter DirichletCharacter::apply_galois(const FieldAutomorphism& sigma) const {
  std::vector<NFElem> vals;
  vals.reserve(values_.size());
  for (const NFElem& v : values_) vals.push_back(sigma(v));
  return DirichletCharacter(group_, field_, std::move(vals));
}

DirichletCharacter DirichletCharacter::change_field(const FieldEmbedding& emb) const {
  std::vector<NFElem> vals;
  vals.reserve(values_.size());
  for (const NFElem& v : values_) vals.push_back(emb(v));
  return DirichletCharacter(group_, emb.to(), std::move(vals));
}

bool DirichletCharacter::equals(const DirichletCharacter& o) const {
  if (modulus() != o.modulus()) return false;
  if (!field_->same_field(*o.field_)) return false;
  for (size_t i = 0; i < values_.size(); ++i)
    if (!(values_[i] == o.values_[i])) return false;
  return true;
}

bool DirichletCharacter::same_primitive(const DirichletCharacter& o) const {
  if (!field_->same_field(*o.field_)) return false;
  DirichletCharacter a = primitivize();
  DirichletCharacter b = o.primitivize();
  return a.equals(b);
}

std::vector<DirichletCharacter> quadratic_characters(long N, const NumberFieldPtr& field) {
  UnitGroup g = UnitGroup::of(N);
  size_t k = g.gens().size();
  NFElem one = field->one();
  NFElem minus_one = -field->one();
  std::vector<DirichletCharacter> out;
  // Each generator of even order may independently map to -1.
  std::vector<int> can_flip(k);
  for (size_t i = 0; i < k; ++i) can_flip[i] = g.orders()[i] % 2 == 0;
  std::vector<int> choice(k, 0);
  while (true) {
    std::vector<NFElem> vals;
    vals.reserve(k);
    for (size_t i = 0; i < k; ++i) vals.push_back(choice[i] ? minus_one : one);
    out.emplace_back(g, field, std::move(vals));
    size_t pos = 0;
    while (pos < k) {
      if (can_flip[pos] && choice[pos] == 0) {
        choice[pos] = 1;
        break;
      }
      choice[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return out;
}

Theorem1Report theorem1_hypotheses(int genus, int weight, long N) {
  if (genus < 1 || N < 1) throw std::invalid_argument("genus and level must be positive");
  Theorem1Report r;
  r.parity_ok = (std::abs(genus - weight) % 2) == 1;
  UnitGroup g = UnitGroup::of(N);
  long target = 2L * genus;
  std::optional<long> plain;
  for (long u : g.units()) {
    if (g.element_order(u) != target) continue;
    if (!plain) plain = u;
    if (power_mod(u, genus, N) == (N - 1) % N) {
      r.witness = u;
      r.witness_power_identity = true;
      break;
    }
  }
  if (!r.witness && plain) r.witness = plain;
  r.order_element_ok = plain.has_value();
  return r;
}

std::optional<long> find_sigma(long N, int genus, int weight, const DirichletCharacter& psi) {
  UnitGroup g = UnitGroup::of(N);
  long target = 2L * genus;
  bool want_minus = ((weight - genus + 1) % 2) != 0;
  NFElem want = want_minus ? -psi.value_field()->one() : psi.value_field()->one();
  for (long u : g.units()) {
    if (g.element_order(u) != target) continue;
    if (power_mod(u, genus, N) != (N - 1) % N) continue;
    if (psi.evaluate(u) == want) return u;
  }
  return std::nullopt;
}

}  // namespace twistkit
