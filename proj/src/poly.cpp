#include "twistkit/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace twistkit {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // mpq_class accepts "n/d" but performs no validation or canonicalization.
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
      throw std::invalid_argument("malformed rational literal: " + s);
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer symmetric_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;           // sign follows the dividend in GMP
  if (r < 0) r += m;           // now in [0, m)
  if (2 * r > m) r -= m;       // shift to (-m/2, m/2]
  return r;
}

RationalPoly::RationalPoly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::x() { return monomial(1, 1); }

RationalPoly RationalPoly::monomial(int degree, const Rational& c) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  if (c == 0) return RationalPoly{};
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool RationalPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

const Rational& RationalPoly::coeff(int i) const {
  static const Rational kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const Rational& RationalPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const { return *this + (-o); }

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator*(const Rational& s) const {
  if (s == 0) return {};
  std::vector<Rational> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
  return RationalPoly(std::move(v));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  RationalPoly r = *this;
  if (r.degree() < d.degree()) return {RationalPoly{}, r};
  std::vector<Rational> q(r.degree() - d.degree() + 1, Rational(0));
  const Rational& lead = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Rational c = r.leading() / lead;
    q[shift] = c;
    // r -= c * x^shift * d, done in place to avoid building monomials
    std::vector<Rational> rc = r.c_;
    for (int i = 0; i <= d.degree(); ++i) rc[i + shift] -= c * d.c_[i];
    r = RationalPoly(std::move(rc));
  }
  return {RationalPoly(std::move(q)), r};
}

RationalPoly RationalPoly::operator/(const RationalPoly& d) const { return divmod(d).first; }
RationalPoly RationalPoly::operator%(const RationalPoly& d) const { return divmod(d).second; }

bool RationalPoly::divides(const RationalPoly& multiple) const {
  if (is_zero()) return multiple.is_zero();
  return multiple.divmod(*this).second.is_zero();
}

RationalPoly RationalPoly::pow(unsigned e) const {
  RationalPoly result(Rational(1));
  RationalPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) throw std::domain_error("monic() of zero polynomial");
  return *this * (Rational(1) / leading());
}

RationalPoly RationalPoly::compose(const RationalPoly& inner) const {
  RationalPoly result;
  for (int i = degree(); i >= 0; --i) {  // Horner on polynomials
    result = result * inner + RationalPoly(c_[i]);
  }
  return result;
}

Rational RationalPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * t + c_[i];
  return acc;
}

std::strong_ordering RationalPoly::operator<=>(const RationalPoly& o) const {
  if (degree() != o.degree()) return degree() <=> o.degree();
  for (int i = degree(); i >= 0; --i) {
    int c = cmp(c_[i], o.c_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string RationalPoly::to_display_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = c > 0 ? c : Rational(-c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1 && i > 0);
    if (!unit) out << rational_to_string(a);
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a, y = b;
  while (!y.is_zero()) {
    RationalPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
    // Normalizing each remainder keeps mpq coefficient heights in check.
    if (!y.is_zero()) y = y.monic();
  }
  return x.is_zero() ? x : x.monic();
}

RationalPoly squarefree_part(const RationalPoly& a) {
  if (a.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
  RationalPoly g = gcd(a, a.derivative());
  return (a / g).monic();
}

Rational resultant(const RationalPoly& a, const RationalPoly& b) {
  // Euclidean resultant with the standard transformation rules:
  //   Res(a,b) = (-1)^(deg a * deg b) Res(b,a)
  //   Res(a,b) = lc(b)^(deg a - deg r) Res(b, r) * ... applied iteratively.
  if (a.is_zero() || b.is_zero()) return 0;
  RationalPoly f = a, g = b;
  Rational acc(1);
  bool negate = false;
  while (g.degree() > 0) {
    RationalPoly r = f % g;
    if (r.is_zero()) {
      // Nontrivial common factor unless g is the gcd with degree 0 (handled above).
      return 0;
    }
    // Res(f,g) = (-1)^(df*dg) * lc(g)^(df - dr) * Res(g,r)
    if ((f.degree() % 2) && (g.degree() % 2)) negate = !negate;
    Rational lc = g.leading();
    int e = f.degree() - r.degree();
    for (int i = 0; i < e; ++i) acc *= lc;
    f = std::move(g);
    g = std::move(r);
  }
  // g is a nonzero constant: Res(f, c) = c^(deg f).
  Rational c = g.coeff(0);
  Rational pw(1);
  for (int i = 0; i < f.degree(); ++i) pw *= c;
  acc *= pw;
  return negate ? -acc : acc;
}

}  // namespace twistkit
