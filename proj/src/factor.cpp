#include "twistkit/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace twistkit {
namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for a word-sized odd prime p. Polynomials ascending,
// trimmed, coefficients in [0, p).
// ---------------------------------------------------------------------------

using ModPoly = std::vector<uint64_t>;

void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mp_deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  mp_trim(c);
  return c;
}

// Remainder of a by monic m.
ModPoly mp_rem(ModPoly a, const ModPoly& m, uint64_t p) {
  int dm = mp_deg(m);
  while (mp_deg(a) >= dm) {
    uint64_t c = a.back();
    int shift = mp_deg(a) - dm;
    if (c != 0) {
      for (int i = 0; i <= dm; ++i) {
        uint64_t t = m[i] * c % p;
        a[i + shift] = (a[i + shift] + p - t) % p;
      }
    }
    a.pop_back();
    mp_trim(a);
  }
  return a;
}

ModPoly mp_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, uint64_t p) {
  return mp_rem(mp_mul(a, b, p), m, p);
}

ModPoly mp_monic(ModPoly a, uint64_t p) {
  if (a.empty()) return a;
  uint64_t inv = invmod_u64(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, uint64_t p) {
  while (!b.empty()) {
    ModPoly r = mp_rem(std::move(a), mp_monic(b, p), p);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(std::move(a), p);
}

ModPoly mp_derivative(const ModPoly& a, uint64_t p) {
  if (a.size() <= 1) return {};
  ModPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
  mp_trim(d);
  return d;
}

ModPoly mp_sub(ModPoly a, const ModPoly& b, uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  mp_trim(a);
  return a;
}

// x^(p^j) images of the basis give the Frobenius matrix; its fixed space is
// the Berlekamp subalgebra, whose dimension equals the number of irreducible
// factors of the (squarefree monic) input.
struct Berlekamp {
  uint64_t p;
  ModPoly f;                         // squarefree monic
  std::vector<std::vector<uint64_t>> kernel;  // basis of ker(Frobenius - id)

  explicit Berlekamp(ModPoly poly, uint64_t prime) : p(prime), f(std::move(poly)) {
    int d = mp_deg(f);
    // column j of Q = coefficients of x^(j*p) mod f
    ModPoly xp = {0, 1};
    {  // x^p mod f by square and multiply on the exponent
      ModPoly acc = {1};
      ModPoly base = {0, 1};
      uint64_t e = p;
      while (e) {
        if (e & 1) acc = mp_mulmod(acc, base, f, p);
        base = mp_mulmod(base, base, f, p);
        e >>= 1;
      }
      xp = acc;
    }
    std::vector<std::vector<uint64_t>> M(d, std::vector<uint64_t>(d, 0));  // Q - I
    ModPoly col = {1};
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i <= mp_deg(col); ++i) M[i][j] = col[i];
      M[j][j] = (M[j][j] + p - 1) % p;
      col = mp_mulmod(col, xp, f, p);
    }
    kernel = nullspace(M, d);
  }

  int factor_count() const { return static_cast<int>(kernel.size()); }

  std::vector<std::vector<uint64_t>> nullspace(std::vector<std::vector<uint64_t>>& M, int d) {
    // Gauss-Jordan; track pivot column per row.
    std::vector<int> pivot_col(d, -1);
    int row = 0;
    for (int col = 0; col < d && row < d; ++col) {
      int sel = -1;
      for (int i = row; i < d; ++i)
        if (M[i][col] != 0) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      std::swap(M[sel], M[row]);
      uint64_t inv = invmod_u64(M[row][col], p);
      for (int j = 0; j < d; ++j) M[row][j] = M[row][j] * inv % p;
      for (int i = 0; i < d; ++i) {
        if (i == row || M[i][col] == 0) continue;
        uint64_t c = M[i][col];
        for (int j = 0; j < d; ++j) M[i][j] = (M[i][j] + p - c * M[row][j] % p) % p;
      }
      pivot_col[row] = col;
      ++row;
    }
    std::vector<bool> is_pivot(d, false);
    for (int i = 0; i < row; ++i) is_pivot[pivot_col[i]] = true;
    std::vector<std::vector<uint64_t>> basis;
    for (int free = 0; free < d; ++free) {
      if (is_pivot[free]) continue;
      std::vector<uint64_t> v(d, 0);
      v[free] = 1;
      for (int i = 0; i < row; ++i) {
        // pivot variable = -M[i][free] * v[free]
        v[pivot_col[i]] = (p - M[i][free]) % p;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Deterministic splitting: refine with gcd(g, v - s) across the kernel basis.
  std::vector<ModPoly> split() const {
    std::vector<ModPoly> factors = {f};
    size_t want = kernel.size();
    for (const auto& vcoef : kernel) {
      if (factors.size() == want) break;
      ModPoly v(vcoef.begin(), vcoef.end());
      mp_trim(v);
      if (mp_deg(v) < 1) continue;  // the constants split nothing
      std::vector<ModPoly> next;
      for (const auto& g : factors) {
        if (mp_deg(g) == 1) {
          next.push_back(g);
          continue;
        }
        ModPoly rem = g;
        std::vector<ModPoly> pieces;
        for (uint64_t s = 0; s < p && mp_deg(rem) > 0; ++s) {
          ModPoly vs = v;
          vs[0] = (vs[0] + p - s % p) % p;
          mp_trim(vs);
          ModPoly d = mp_gcd(rem, vs, p);
          if (mp_deg(d) > 0 && mp_deg(d) < mp_deg(rem)) {
            pieces.push_back(d);
            // rem /= d (d is monic)
            ModPoly q(mp_deg(rem) - mp_deg(d) + 1, 0);
            ModPoly r = rem;
            int dd = mp_deg(d);
            while (mp_deg(r) >= dd) {
              uint64_t c = r.back();
              int shift = mp_deg(r) - dd;
              q[shift] = c;
              for (int i = 0; i <= dd; ++i)
                r[i + shift] = (r[i + shift] + p - d[i] * c % p) % p;
              mp_trim(r);
            }
            mp_trim(q);
            rem = std::move(q);
          }
        }
        if (mp_deg(rem) > 0) pieces.push_back(rem);
        for (auto& piece : pieces) next.push_back(mp_monic(std::move(piece), p));
      }
      factors = std::move(next);
    }
    return factors;
  }
};

// ---------------------------------------------------------------------------
// Integer polynomial helpers (coefficients mpz, ascending, trimmed).
// ---------------------------------------------------------------------------

using IntPoly = std::vector<Integer>;

void ip_trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int ip_deg(const IntPoly& a) { return static_cast<int>(a.size()) - 1; }

IntPoly ip_from_rational(const RationalPoly& p, Integer* denominator_out) {
  Integer den = 1;
  for (const Rational& c : p.coeffs()) {
    Integer d = c.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  IntPoly out(p.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) {
    Rational scaled = p.coeffs()[i] * Rational(den);
    out[i] = scaled.get_num();  // denominator is 1 by construction
  }
  if (denominator_out) *denominator_out = den;
  ip_trim(out);
  return out;
}

Integer ip_content(const IntPoly& a) {
  Integer g = 0;
  for (const Integer& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly ip_primitive(IntPoly a) {
  Integer g = ip_content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;  // normalize leading coefficient positive
  for (auto& c : a) c /= g;
  return a;
}

RationalPoly ip_to_rational(const IntPoly& a) {
  std::vector<Rational> v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v[i] = Rational(a[i]);
  return RationalPoly(std::move(v));
}

// Exact division in Z[x] with early abort on the first non-integral step.
std::optional<IntPoly> ip_exact_divide(const IntPoly& P, const IntPoly& g) {
  int dg = ip_deg(g);
  if (dg < 0 || ip_deg(P) < dg) return std::nullopt;
  IntPoly r = P;
  IntPoly q(ip_deg(P) - dg + 1);
  const Integer& lead = g.back();
  for (int k = ip_deg(P) - dg; k >= 0; --k) {
    Integer& cur = r[k + dg];
    if (cur == 0) {
      q[k] = 0;
      continue;
    }
    if (!mpz_divisible_p(cur.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer c = cur / lead;
    q[k] = c;
    for (int i = 0; i <= dg; ++i) r[i + k] -= c * g[i];
  }
  for (const Integer& c : r)
    if (c != 0) return std::nullopt;
  return q;
}

// ---------------------------------------------------------------------------
// Z/m[x] helpers for Hensel lifting (m = p^k). Coefficients in [0, m).
// ---------------------------------------------------------------------------

using ZmPoly = std::vector<Integer>;

void zm_normalize(ZmPoly& a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  ip_trim(a);
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZmPoly c(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  zm_normalize(c, m);
  return c;
}

ZmPoly zm_sub(ZmPoly a, const ZmPoly& b, const Integer& m) {
  if (a.size() < b.size()) a.resize(b.size(), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  zm_normalize(a, m);
  return a;
}

// Division by a monic divisor over Z/m: returns {quotient, remainder}.
std::pair<ZmPoly, ZmPoly> zm_divmod_monic(ZmPoly a, const ZmPoly& d, const Integer& m) {
  int dd = ip_deg(d);
  if (dd < 0 || d.back() != 1) throw std::logic_error("zm_divmod_monic: divisor not monic");
  if (ip_deg(a) < dd) return {{}, std::move(a)};
  ZmPoly q(ip_deg(a) - dd + 1, Integer(0));
  while (ip_deg(a) >= dd) {
    Integer c = a.back();
    int shift = ip_deg(a) - dd;
    q[shift] = c;
    for (int i = 0; i <= dd; ++i) {
      a[i + shift] -= c * d[i];
    }
    zm_normalize(a, m);
  }
  ip_trim(q);
  return {std::move(q), std::move(a)};
}

// One quadratic Hensel step for a monic pair: from modulus m to m^2 capped at cap.
// Inputs satisfy F = A*B and s*A + t*B = 1 (mod m); outputs satisfy the same mod m2.
struct HenselPair {
  ZmPoly A, B, s, t;
};

HenselPair hensel_step(const ZmPoly& F, const HenselPair& in, const Integer& m,
                       const Integer& cap) {
  Integer m2 = m * m;
  if (m2 > cap) m2 = cap;  // reducing a valid lift mod a smaller power stays valid
  HenselPair out;
  ZmPoly e = zm_sub(F, zm_mul(in.A, in.B, m2), m2);
  ZmPoly se = zm_mul(in.s, e, m2);
  out.B = in.B;
  {
    ZmPoly r = zm_divmod_monic(se, in.B, m2).second;
    if (out.B.size() < r.size()) out.B.resize(r.size(), Integer(0));
    for (size_t i = 0; i < r.size(); ++i) out.B[i] += r[i];
    zm_normalize(out.B, m2);
  }
  auto [qa, ra] = zm_divmod_monic(F, out.B, m2);
  if (!ra.empty()) throw std::logic_error("hensel_step: quotient inexact");
  out.A = std::move(qa);
  // Bezout lift: s1 = s - (s*b rem B1), t1 = (1 - s1*A1)/B1
  ZmPoly sa = zm_mul(in.s, out.A, m2);
  ZmPoly tb = zm_mul(in.t, out.B, m2);
  ZmPoly b = sa;
  if (b.size() < tb.size()) b.resize(tb.size(), Integer(0));
  for (size_t i = 0; i < tb.size(); ++i) b[i] += tb[i];
  if (b.empty()) b.resize(1, Integer(0));
  b[0] -= 1;
  zm_normalize(b, m2);
  ZmPoly sb_rem = zm_divmod_monic(zm_mul(in.s, b, m2), out.B, m2).second;
  out.s = zm_sub(in.s, sb_rem, m2);
  ZmPoly one_minus = zm_mul(out.s, out.A, m2);
  for (auto& c : one_minus) c = -c;
  if (one_minus.empty()) one_minus.resize(1, Integer(0));
  one_minus[0] += 1;
  zm_normalize(one_minus, m2);
  auto [qt, rt] = zm_divmod_monic(one_minus, out.B, m2);
  if (!rt.empty()) throw std::logic_error("hensel_step: bezout lift inexact");
  out.t = std::move(qt);
  return out;
}

// Extended Euclid over F_p for the initial Bezout pair.
void mp_extgcd(const ModPoly& a, const ModPoly& b, uint64_t p, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    // divide r0 by r1
    uint64_t lcinv = invmod_u64(r1.back(), p);
    ModPoly q;
    {
      ModPoly r = r0;
      int d1 = mp_deg(r1);
      if (mp_deg(r) >= d1) q.assign(mp_deg(r) - d1 + 1, 0);
      while (mp_deg(r) >= d1) {
        uint64_t c = r.back() * lcinv % p;
        int shift = mp_deg(r) - d1;
        q[shift] = c;
        for (int i = 0; i <= d1; ++i) r[i + shift] = (r[i + shift] + p - r1[i] * c % p) % p;
        mp_trim(r);
      }
      r0 = r1;
      r1 = r;
    }
    mp_trim(q);
    ModPoly ns = mp_sub(s0, mp_mul(q, s1, p), p);
    ModPoly nt = mp_sub(t0, mp_mul(q, t1, p), p);
    s0 = s1;
    s1 = ns;
    t0 = t1;
    t1 = nt;
  }
  // r0 = gcd, should be a nonzero constant for coprime inputs
  if (mp_deg(r0) != 0) throw std::logic_error("mp_extgcd: inputs not coprime");
  uint64_t inv = invmod_u64(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  s = s0;
  t = t0;
}

ZmPoly zm_from_mod(const ModPoly& a) {
  ZmPoly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = Integer(static_cast<unsigned long>(a[i]));
  return out;
}

// Lift the full modular factorization of monic F from p to p^e (tree of pairs).
std::vector<ZmPoly> hensel_lift_tree(const ZmPoly& F, const std::vector<ModPoly>& factors,
                                     uint64_t p, const Integer& target) {
  if (factors.size() == 1) {
    ZmPoly g = F;
    zm_normalize(g, target);
    return {g};
  }
  size_t mid = factors.size() / 2;
  ModPoly A0 = {1}, B0 = {1};
  for (size_t i = 0; i < mid; ++i) A0 = mp_mul(A0, factors[i], p);
  for (size_t i = mid; i < factors.size(); ++i) B0 = mp_mul(B0, factors[i], p);
  ModPoly s0, t0;
  mp_extgcd(A0, B0, p, s0, t0);
  HenselPair pair{zm_from_mod(A0), zm_from_mod(B0), zm_from_mod(s0), zm_from_mod(t0)};
  Integer m(static_cast<unsigned long>(p));
  while (m < target) {
    pair = hensel_step(F, pair, m, target);
    m = m * m;
    if (m > target) m = target;
  }
  std::vector<ModPoly> left(factors.begin(), factors.begin() + mid);
  std::vector<ModPoly> right(factors.begin() + mid, factors.end());
  std::vector<ZmPoly> out = hensel_lift_tree(pair.A, left, p, target);
  std::vector<ZmPoly> r = hensel_lift_tree(pair.B, right, p, target);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

const uint64_t kPrimeScanLimit = 20000;

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModPoly ip_reduce_mod(const IntPoly& a, uint64_t p) {
  ModPoly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Integer r = a[i] % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += Integer(static_cast<unsigned long>(p));
    out[i] = r.get_ui();
  }
  mp_trim(out);
  return out;
}

// Factor a primitive squarefree integer polynomial with positive leading
// coefficient into primitive irreducible integer factors.
std::vector<IntPoly> factor_squarefree_primitive(IntPoly P) {
  std::vector<IntPoly> out;
  if (ip_deg(P) <= 1) {
    if (ip_deg(P) >= 1) out.push_back(std::move(P));
    return out;
  }

  // Prime selection: squarefree reduction, factor count as the quality metric.
  struct Candidate {
    uint64_t p;
    int count;
  };
  std::vector<Candidate> cands;
  for (uint64_t p = 3; p < kPrimeScanLimit && cands.size() < 6; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(P.back().get_mpz_t(), p)) continue;
    ModPoly fp = ip_reduce_mod(P, p);
    if (mp_deg(fp) != ip_deg(P)) continue;
    ModPoly fpm = mp_monic(fp, p);
    ModPoly g = mp_gcd(fpm, mp_derivative(fpm, p), p);
    if (mp_deg(g) != 0) continue;  // not squarefree mod p
    Berlekamp bk(fpm, p);
    cands.push_back({p, bk.factor_count()});
    if (bk.factor_count() == 1) break;  // irreducible already certified
  }
  if (cands.empty()) throw std::runtime_error("no usable prime found for factorization");
  auto best = *std::min_element(cands.begin(), cands.end(),
                                [](const Candidate& a, const Candidate& b) {
                                  return a.count < b.count || (a.count == b.count && a.p < b.p);
                                });
  if (best.count == 1) {
    out.push_back(std::move(P));
    return out;
  }

  uint64_t p = best.p;
  ModPoly fpm = mp_monic(ip_reduce_mod(P, p), p);
  Berlekamp bk(fpm, p);
  std::vector<ModPoly> modular = bk.split();
  std::sort(modular.begin(), modular.end(),
            [](const ModPoly& a, const ModPoly& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });

  // Landau-Mignotte style bound: any factor of P has coefficients bounded by
  // 2^deg(P) * ||P||_2 * |lc(P)| in absolute value.
  Integer norm2 = 0;
  for (const Integer& c : P) norm2 += c * c;
  mpz_sqrt(norm2.get_mpz_t(), norm2.get_mpz_t());
  norm2 += 1;
  Integer bound = norm2 * abs(P.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), ip_deg(P));
  Integer target(static_cast<unsigned long>(p));
  while (target <= 2 * bound) target *= static_cast<unsigned long>(p);

  // Work with the monic image of P mod p^e.
  ZmPoly F(P.begin(), P.end());
  zm_normalize(F, target);
  Integer lc_inv;
  {
    Integer lc = P.back() % target;
    if (lc < 0) lc += target;
    if (mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t()) == 0)
      throw std::logic_error("leading coefficient not invertible mod p^e");
    for (auto& c : F) c = c * lc_inv % target;
    ip_trim(F);
  }
  std::vector<ZmPoly> lifted = hensel_lift_tree(F, modular, p, target);

  // Subset recombination by ascending cardinality. The trailing-coefficient
  // divisibility filter rejects nearly all false subsets with one mpz product.
  std::vector<ZmPoly> pool = std::move(lifted);
  IntPoly remaining = P;
  auto try_subset = [&](const std::vector<size_t>& idx) -> bool {
    Integer lc = remaining.back();
    if (remaining[0] != 0) {
      Integer prod0 = lc % target;
      if (prod0 < 0) prod0 += target;
      for (size_t i : idx) {
        Integer t = pool[i].empty() ? Integer(0) : pool[i][0];
        prod0 = prod0 * t % target;
      }
      Integer trailing = symmetric_mod(prod0, target);
      if (trailing == 0) return false;
      Integer rhs = remaining[0] * lc;
      if (!mpz_divisible_p(rhs.get_mpz_t(), trailing.get_mpz_t())) return false;
    }
    ZmPoly prod(1, lc % target);
    if (prod[0] < 0) prod[0] += target;
    for (size_t i : idx) prod = zm_mul(prod, pool[i], target);
    IntPoly g(prod.size());
    for (size_t i = 0; i < prod.size(); ++i) g[i] = symmetric_mod(prod[i], target);
    ip_trim(g);
    if (g.empty()) return false;
    IntPoly gp = ip_primitive(g);
    auto quo = ip_exact_divide(remaining, gp);
    if (!quo) return false;
    out.push_back(gp);
    remaining = std::move(*quo);
    return true;
  };

  size_t card = 1;
  while (2 * card <= pool.size()) {
    // enumerate index subsets of the current pool of size card
    std::vector<size_t> idx(card);
    for (size_t i = 0; i < card; ++i) idx[i] = i;
    bool found = false;
    while (true) {
      int degsum = 0;
      for (size_t i : idx) degsum += ip_deg(pool[i]);
      if (2 * degsum <= ip_deg(remaining) && try_subset(idx)) {
        // Remove used modular factors; restart the same cardinality.
        std::vector<ZmPoly> np;
        for (size_t i = 0, k = 0; i < pool.size(); ++i) {
          if (k < idx.size() && idx[k] == i) {
            ++k;
            continue;
          }
          np.push_back(std::move(pool[i]));
        }
        pool = std::move(np);
        found = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(card) - 1;
      while (pos >= 0 && idx[pos] == pool.size() - card + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < card; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++card;
    if (pool.empty()) break;
    // Refresh the target leading coefficient after each committed factor.
  }
  if (ip_deg(remaining) >= 1) out.push_back(ip_primitive(remaining));
  return out;
}

// Yun squarefree decomposition of a monic polynomial over Q.
std::vector<std::pair<RationalPoly, int>> yun_decomposition(const RationalPoly& f) {
  std::vector<std::pair<RationalPoly, int>> out;
  RationalPoly d = f.derivative();
  RationalPoly g = gcd(f, d);
  RationalPoly w = f / g;
  RationalPoly y = d / g;
  RationalPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    RationalPoly h = gcd(w, z);
    if (h.degree() > 0) out.emplace_back(h, i);
    w = w / h;
    y = z / h;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

}  // namespace

bool certified_squarefree(const RationalPoly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  IntPoly P = ip_primitive(ip_from_rational(p, nullptr));
  int usable = 0;
  for (uint64_t q = 3; q < kPrimeScanLimit && usable < 25; q += 2) {
    if (!is_prime_u64(q)) continue;
    if (mpz_divisible_ui_p(P.back().get_mpz_t(), q)) continue;
    ModPoly fq = ip_reduce_mod(P, q);
    if (mp_deg(fq) != ip_deg(P)) continue;
    ++usable;
    ModPoly g = mp_gcd(fq, mp_derivative(fq, q), q);
    if (mp_deg(g) == 0) return true;
  }
  return false;
}

Factorization factor_rational_polynomial(const RationalPoly& p) {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  Factorization result;
  result.unit = p.leading();
  if (p.degree() == 0) return result;
  RationalPoly monic = p.monic();
  // Exact Yun decomposition on rational coefficients is expensive at high
  // degree; a modular certificate lets squarefree inputs skip it.
  std::vector<std::pair<RationalPoly, int>> parts;
  if (certified_squarefree(monic)) {
    parts.emplace_back(monic, 1);
  } else {
    parts = yun_decomposition(monic);
  }
  for (const auto& [part, mult] : parts) {
    IntPoly ipart = ip_from_rational(part, nullptr);
    ipart = ip_primitive(ipart);
    for (IntPoly& fac : factor_squarefree_primitive(std::move(ipart))) {
      result.factors.push_back({ip_to_rational(fac).monic(), mult});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return a.factor < b.factor; });
  return result;
}

bool is_irreducible(const RationalPoly& p) {
  if (p.degree() < 1) return false;
  Factorization f = factor_rational_polynomial(p);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

}  // namespace twistkit
