#include "twistkit/unit_group.hpp"

#include <numeric>
#include <stdexcept>

namespace twistkit {
namespace {

long crt_pair(long r1, long m1, long r2, long m2) {
  // Solve x = r1 (mod m1), x = r2 (mod m2) for coprime moduli by scanning the
  // first class; moduli here are small prime-power cofactors.
  long x = r1 % m1;
  while (x % m2 != r2 % m2) x += m1;
  return x % (m1 * m2);
}

std::vector<std::pair<long, long>> prime_power_split(long n) {
  std::vector<std::pair<long, long>> out;  // (p, p^e)
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    long q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.emplace_back(p, q);
  }
  if (n > 1) out.emplace_back(n, n);
  return out;
}

long phi_of_prime_power(long p, long q) { return q / p * (p - 1); }

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

long smallest_primitive_root(long p, long q) {
  long order = phi_of_prime_power(p, q);
  std::vector<long> ells = prime_divisors(order);
  for (long g = 2; g < q; ++g) {
    if (std::gcd(g, q) != 1) continue;
    bool primitive = true;
    for (long ell : ells) {
      if (power_mod(g, order / ell, q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw std::logic_error("no primitive root found for odd prime power");
}

}  // namespace

long power_mod(long base, long exp, long modulus) {
  if (modulus <= 0) throw std::invalid_argument("power_mod: modulus must be positive");
  long long r = 1 % modulus;
  long long b = base % modulus;
  if (b < 0) b += modulus;
  while (exp > 0) {
    if (exp & 1) r = r * b % modulus;
    b = b * b % modulus;
    exp >>= 1;
  }
  return static_cast<long>(r);
}

UnitGroup UnitGroup::of(long N) {
  if (N < 1) throw std::invalid_argument("modulus must be >= 1");
  UnitGroup u;
  u.n_ = N;
  for (auto [p, q] : prime_power_split(N)) {
    long cofactor = N / q;
    auto lift = [&](long r) { return cofactor == 1 ? r % q : crt_pair(r, q, 1, cofactor); };
    if (p == 2) {
      if (q == 2) continue;  // trivial factor
      if (q == 4) {
        u.gens_.push_back(lift(3));
        u.orders_.push_back(2);
      } else {
        u.gens_.push_back(lift(q - 1));  // class of -1
        u.orders_.push_back(2);
        u.gens_.push_back(lift(5));
        u.orders_.push_back(q / 4);
      }
    } else {
      u.gens_.push_back(lift(smallest_primitive_root(p, q)));
      u.orders_.push_back(phi_of_prime_power(p, q));
    }
  }

  // Exponent table by odometer over the generator orders.
  u.table_.assign(N + 1, {});
  u.unit_mask_.assign(N + 1, false);
  std::vector<long> exps(u.gens_.size(), 0);
  while (true) {
    long long v = 1 % N;
    for (size_t i = 0; i < u.gens_.size(); ++i)
      v = v * power_mod(u.gens_[i], exps[i], N) % N;
    long idx = (N == 1) ? 1 : static_cast<long>(v);
    u.table_[idx] = exps;
    u.unit_mask_[idx] = true;
    size_t pos = 0;
    while (pos < exps.size()) {
      if (++exps[pos] < u.orders_[pos]) break;
      exps[pos] = 0;
      ++pos;
    }
    if (pos == exps.size()) break;
  }
  return u;
}

long UnitGroup::phi() const {
  long out = 1;
  for (long o : orders_) out *= o;
  return out;
}

long UnitGroup::reduce(long n) const {
  long r = n % n_;
  if (r < 0) r += n_;
  if (n_ == 1) return 1;
  return r;
}

bool UnitGroup::is_unit(long n) const {
  long r = reduce(n);
  return r >= 1 && r <= n_ && unit_mask_[r];
}

std::vector<long> UnitGroup::exponents(long n) const {
  if (!is_unit(n)) throw std::domain_error("discrete logarithm of a non-unit");
  return table_[reduce(n)];
}

long UnitGroup::element_order(long n) const {
  std::vector<long> e = exponents(n);
  long out = 1;
  for (size_t i = 0; i < e.size(); ++i) {
    long m = orders_[i] / std::gcd(orders_[i], e[i]);
    out = std::lcm(out, m);
  }
  return out;
}

std::vector<long> UnitGroup::units() const {
  if (n_ == 1) return {1};
  std::vector<long> out;
  for (long r = 1; r < n_; ++r)
    if (unit_mask_[r]) out.push_back(r);
  return out;
}

}  // namespace twistkit
