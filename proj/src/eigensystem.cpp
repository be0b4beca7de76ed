#include "twistkit/eigensystem.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "twistkit/embeddings.hpp"

namespace twistkit {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
  for (long p = 2; p <= bound; ++p) {
    if (!sieve[p]) continue;
    out.push_back(p);
    for (long q = p * p; q <= bound; q += p) sieve[q] = false;
  }
  return out;
}

EigenSystem::EigenSystem(std::string label, long level, int weight,
                         DirichletCharacter nebentypus, NumberFieldPtr hecke_field,
                         std::map<long, NFElem> ap, std::map<long, NFElem> ap_squared)
    : label_(std::move(label)),
      level_(level),
      weight_(weight),
      neben_(std::move(nebentypus)),
      field_(std::move(hecke_field)),
      ap_(std::move(ap)),
      ap2_(std::move(ap_squared)) {
  if (level_ < 1) throw std::invalid_argument("level must be positive");
  if (weight_ < 1) throw std::invalid_argument("weight must be positive");
  if (!field_) throw std::invalid_argument("eigen-system needs a Hecke field");
  if (neben_.modulus() != level_) {
    if (level_ % neben_.conductor() != 0)
      throw std::invalid_argument("nebentypus conductor must divide the level");
    neben_ = neben_.induce(level_);
  }
  if (!neben_.value_field()->same_field(*field_)) {
    // Nebentypus values must be expressible in the Hecke field; require the
    // same presentation so that products a_p * eps(p) are well defined.
    throw std::invalid_argument("nebentypus values must live in the Hecke field");
  }
  for (const auto& [p, v] : ap_) {
    if (!is_prime(p)) throw std::invalid_argument("eigenvalue index is not prime");
    if (!v.field()->same_field(*field_))
      throw std::invalid_argument("eigenvalue lives in the wrong field");
  }
  for (const auto& [p, v] : ap2_) {
    if (!is_prime(p)) throw std::invalid_argument("prime-square index is not prime");
    if (!v.field()->same_field(*field_))
      throw std::invalid_argument("prime-square eigenvalue lives in the wrong field");
  }
  if (!ap_.empty()) {
    long largest = ap_.rbegin()->first;
    for (long p : primes_up_to(largest))
      if (!has_ap(p)) {
        std::ostringstream os;
        os << "eigenvalue coverage has a gap at p = " << p;
        throw std::invalid_argument(os.str());
      }
    prime_bound_ = largest;
  }
}

const NFElem& EigenSystem::ap_at(long p) const {
  auto it = ap_.find(p);
  if (it == ap_.end()) throw std::out_of_range("no eigenvalue stored for this prime");
  return it->second;
}

NFElem EigenSystem::predicted_ap_squared(long p) const {
  const NFElem& a = ap_at(p);
  // eps(p) is zero when p divides the level, which collapses the recursion
  // to a_p^2 there; no case split needed.
  NFElem eps = neben_.evaluate(p);
  Integer pk(1);
  for (int i = 0; i + 1 < weight_; ++i) pk *= p;
  return a * a - eps * field_->from_rational(Rational(pk));
}

CheckReport hecke_consistency(const EigenSystem& f) {
  CheckReport report;
  for (const auto& [p, got] : f.ap_squared()) {
    if (!f.has_ap(p)) {
      std::ostringstream os;
      os << "a_{p^2} supplied without a_p at p = " << p;
      report.fail(os.str());
      continue;
    }
    if (!(f.predicted_ap_squared(p) == got)) {
      std::ostringstream os;
      os << "Hecke recursion fails at p = " << p;
      report.fail(os.str());
    }
  }
  return report;
}

CheckReport ramanujan_check(const EigenSystem& f, int precision_bits) {
  CheckReport report;
  auto roots = complex_roots(f.hecke_field()->poly(), precision_bits);
  const double slack = 1e-6;
  for (const auto& [p, a] : f.ap()) {
    if (f.level() % p == 0) continue;
    double bound = 2.0 * std::pow(static_cast<double>(p), (f.weight() - 1) / 2.0);
    for (const auto& root : roots) {
      // |sigma(a_p)| at this embedding, by Horner on the representative.
      auto prec = root.re.get_prec();
      BigComplex value{mpf_class(0, prec), mpf_class(0, prec)};
      const auto& rep = a.rep().coeffs();
      for (auto it = rep.rbegin(); it != rep.rend(); ++it) {
        mpf_class re = value.re * root.re - value.im * root.im;
        mpf_class im = value.re * root.im + value.im * root.re;
        value.re = re + mpf_class(*it, prec);
        value.im = im;
      }
      double mag = abs_value(value).get_d();
      if (mag > bound * (1.0 + slack)) {
        std::ostringstream os;
        os << "eigenvalue bound fails at p = " << p << " (|a_p| ~ " << mag << " > " << bound
           << ")";
        report.fail(os.str());
        break;
      }
    }
  }
  return report;
}

}  // namespace twistkit
