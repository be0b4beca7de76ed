#include "twistkit/number_field.hpp"

#include <algorithm>
#include <stdexcept>

#include "twistkit/factor.hpp"

namespace twistkit {
namespace {

// Extended Euclid over Q[x]: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
struct ExtGcd {
  RationalPoly g, s, t;
};

ExtGcd ext_gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r0 = a, r1 = b;
  RationalPoly s0(Rational(1)), s1, t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    RationalPoly ns = s0 - q * s1;
    RationalPoly nt = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(ns);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational lc = r0.leading();
  Rational inv = Rational(1) / lc;
  return {r0 * inv, s0 * inv, t0 * inv};
}

// Dense Gaussian elimination: find x with sum_i x_i * cols[i] = target, if any.
std::optional<std::vector<Rational>> solve_linear(const std::vector<std::vector<Rational>>& cols,
                                                  const std::vector<Rational>& target) {
  size_t n = target.size();
  size_t k = cols.size();
  // augmented matrix, n rows, k+1 columns
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1, Rational(0)));
  for (size_t j = 0; j < k; ++j) {
    if (cols[j].size() != n) throw std::logic_error("solve_linear: ragged columns");
    for (size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
  }
  for (size_t i = 0; i < n; ++i) m[i][k] = target[i];

  std::vector<int> pivot_of_col(k, -1);
  size_t row = 0;
  for (size_t col = 0; col < k && row < n; ++col) {
    size_t sel = row;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(m[sel], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (size_t j = col; j <= k; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational c = m[i][col];
      for (size_t j = col; j <= k; ++j) m[i][j] -= c * m[row][j];
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  // Inconsistent if a zero row has nonzero rhs.
  for (size_t i = row; i < n; ++i)
    if (m[i][k] != 0) return std::nullopt;
  std::vector<Rational> x(k, Rational(0));
  for (size_t col = 0; col < k; ++col)
    if (pivot_of_col[col] >= 0) x[col] = m[pivot_of_col[col]][k];
  return x;
}

std::vector<Rational> element_vector(const NFElem& e, int dim) {
  std::vector<Rational> v(dim, Rational(0));
  for (int i = 0; i <= e.rep().degree(); ++i) v[i] = e.rep().coeff(i);
  return v;
}

// Newton interpolation through distinct nodes.
RationalPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  size_t n = xs.size();
  std::vector<Rational> dd = ys;  // divided differences, updated in place
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  RationalPoly acc;
  for (size_t i = n; i-- > 0;) {
    RationalPoly node({-xs[i], Rational(1)});
    acc = acc * node + RationalPoly(dd[i]);
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// NFElem
// ---------------------------------------------------------------------------

NFElem::NFElem(NumberFieldPtr field, RationalPoly rep) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("element of null field");
  rep_ = std::move(rep) % field_->poly();
}

bool NFElem::is_one() const { return rep_.degree() == 0 && rep_.coeff(0) == 1; }

Rational NFElem::as_rational() const {
  if (!is_rational()) throw std::domain_error("element is not rational");
  return rep_.coeff(0);
}

void NFElem::require_same_field(const NFElem& o) const {
  if (!field_ || !o.field_) throw std::domain_error("operation on detached element");
  if (field_.get() != o.field_.get() && !field_->same_field(*o.field_))
    throw std::domain_error("elements belong to different fields");
}

NFElem NFElem::operator-() const { return NFElem(field_, -rep_); }

NFElem NFElem::operator+(const NFElem& o) const {
  require_same_field(o);
  return NFElem(field_, rep_ + o.rep_);
}

NFElem NFElem::operator-(const NFElem& o) const {
  require_same_field(o);
  return NFElem(field_, rep_ - o.rep_);
}

NFElem NFElem::operator*(const NFElem& o) const {
  require_same_field(o);
  return NFElem(field_, rep_ * o.rep_);
}

NFElem NFElem::operator*(const Rational& s) const { return NFElem(field_, rep_ * s); }

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  auto [g, s, t] = ext_gcd(rep_, field_->poly());
  if (g.degree() != 0) throw std::logic_error("defining polynomial not irreducible");
  return NFElem(field_, s);
}

NFElem NFElem::operator/(const NFElem& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

NFElem NFElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  NFElem base = *this;
  NFElem acc = field_->one();
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool NFElem::operator==(const NFElem& o) const {
  if (!field_ || !o.field_) return !field_ && !o.field_;
  return field_->same_field(*o.field_) && rep_ == o.rep_;
}

std::strong_ordering NFElem::operator<=>(const NFElem& o) const {
  if (auto c = field_->poly() <=> o.field_->poly(); c != std::strong_ordering::equal) return c;
  return rep_ <=> o.rep_;
}

std::optional<long> NFElem::multiplicative_order(long cap) const {
  if (is_zero()) return std::nullopt;
  NFElem acc = *this;
  for (long k = 1; k <= cap; ++k) {
    if (acc.is_one()) return k;
    acc = acc * *this;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// NumberField
// ---------------------------------------------------------------------------

NumberFieldPtr NumberField::make(RationalPoly f) {
  if (f.degree() < 1) throw std::domain_error("defining polynomial must have degree >= 1");
  if (!f.is_monic()) throw std::domain_error("defining polynomial must be monic");
  if (f.degree() > 1 && !is_irreducible(f))
    throw std::domain_error("defining polynomial is reducible: " + f.to_display_string());
  return NumberFieldPtr(new NumberField(std::move(f)));
}

NumberFieldPtr NumberField::make_unchecked(RationalPoly f) {
  if (f.degree() < 1 || !f.is_monic())
    throw std::domain_error("defining polynomial must be monic of degree >= 1");
  return NumberFieldPtr(new NumberField(std::move(f)));
}

NumberFieldPtr NumberField::rationals() {
  static NumberFieldPtr q = NumberFieldPtr(new NumberField(RationalPoly::x()));
  return q;
}

NFElem NumberField::zero() const { return NFElem(shared_from_this(), RationalPoly{}); }
NFElem NumberField::one() const { return from_rational(1); }
NFElem NumberField::generator() const { return element(RationalPoly::x()); }

NFElem NumberField::from_rational(const Rational& q) const {
  return NFElem(shared_from_this(), RationalPoly(q));
}

NFElem NumberField::element(RationalPoly rep) const {
  return NFElem(shared_from_this(), std::move(rep));
}

NFElem eval_rational_poly(const RationalPoly& p, const NFElem& e) {
  NFElem acc = e.field()->zero();
  for (int i = p.degree(); i >= 0; --i) acc = acc * e + e.field()->from_rational(p.coeff(i));
  return acc;
}

// ---------------------------------------------------------------------------
// FieldAutomorphism / FieldEmbedding
// ---------------------------------------------------------------------------

FieldAutomorphism::FieldAutomorphism(NumberFieldPtr field, NFElem gen_image)
    : field_(std::move(field)), image_(std::move(gen_image)) {
  if (!field_->same_field(*image_.field()))
    throw std::domain_error("automorphism image lies in a different field");
  if (!eval_rational_poly(field_->poly(), image_).is_zero())
    throw std::domain_error("automorphism image is not a root of the defining polynomial");
}

bool FieldAutomorphism::is_identity() const { return image_.rep() == RationalPoly::x(); }

NFElem FieldAutomorphism::operator()(const NFElem& e) const {
  if (!field_->same_field(*e.field())) throw std::domain_error("element outside the domain");
  return eval_rational_poly(e.rep(), image_);
}

FieldAutomorphism FieldAutomorphism::compose(const FieldAutomorphism& inner) const {
  return FieldAutomorphism(field_, (*this)(inner.image_));
}

FieldAutomorphism FieldAutomorphism::inverse() const {
  // The order is bounded by the automorphism group size, itself at most the degree.
  FieldAutomorphism prev = *this;
  FieldAutomorphism cur = compose(*this);
  int guard = field_->degree() + 1;
  while (!cur.is_identity()) {
    prev = cur;
    cur = compose(cur);
    if (--guard < 0) throw std::logic_error("automorphism order exceeds field degree");
  }
  return prev;
}

bool FieldAutomorphism::operator==(const FieldAutomorphism& o) const {
  return field_->same_field(*o.field_) && image_.rep() == o.image_.rep();
}

std::strong_ordering FieldAutomorphism::operator<=>(const FieldAutomorphism& o) const {
  return image_ <=> o.image_;
}

FieldEmbedding::FieldEmbedding(NumberFieldPtr from, NumberFieldPtr to, NFElem gen_image)
    : from_(std::move(from)), to_(std::move(to)), image_(std::move(gen_image)) {
  if (!to_->same_field(*image_.field()))
    throw std::domain_error("embedding image lies outside the codomain");
  if (!eval_rational_poly(from_->poly(), image_).is_zero())
    throw std::domain_error("embedding image is not a root of the source polynomial");
}

NFElem FieldEmbedding::operator()(const NFElem& e) const {
  if (!from_->same_field(*e.field())) throw std::domain_error("element outside the domain");
  return eval_rational_poly(e.rep(), image_);
}

// ---------------------------------------------------------------------------
// NFPoly
// ---------------------------------------------------------------------------

NFPoly::NFPoly(NumberFieldPtr field) : field_(std::move(field)) {}

NFPoly::NFPoly(NumberFieldPtr field, std::vector<NFElem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const NFElem& c : c_)
    if (!field_->same_field(*c.field()))
      throw std::domain_error("coefficient outside the base field");
  trim();
}

NFPoly NFPoly::from_rational_poly(const NumberFieldPtr& field, const RationalPoly& p) {
  std::vector<NFElem> v;
  v.reserve(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) v.push_back(field->from_rational(p.coeff(i)));
  return NFPoly(field, std::move(v));
}

void NFPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool NFPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

NFElem NFPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
  return c_[i];
}

NFPoly NFPoly::operator-() const {
  std::vector<NFElem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(-c);
  return NFPoly(field_, std::move(v));
}

NFPoly NFPoly::operator+(const NFPoly& o) const {
  std::vector<NFElem> v(std::max(c_.size(), o.c_.size()), field_->zero());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = v[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] + o.c_[i];
  return NFPoly(field_, std::move(v));
}

NFPoly NFPoly::operator-(const NFPoly& o) const { return *this + (-o); }

NFPoly NFPoly::operator*(const NFPoly& o) const {
  if (is_zero() || o.is_zero()) return NFPoly(field_);
  std::vector<NFElem> v(c_.size() + o.c_.size() - 1, field_->zero());
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
  return NFPoly(field_, std::move(v));
}

NFPoly NFPoly::operator*(const NFElem& s) const {
  std::vector<NFElem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c * s);
  return NFPoly(field_, std::move(v));
}

bool NFPoly::operator==(const NFPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

std::pair<NFPoly, NFPoly> NFPoly::divmod(const NFPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  NFPoly r = *this;
  if (r.degree() < d.degree()) return {NFPoly(field_), r};
  std::vector<NFElem> q(r.degree() - d.degree() + 1, field_->zero());
  NFElem lead_inv = d.c_.back().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    NFElem c = r.c_.back() * lead_inv;
    q[shift] = c;
    std::vector<NFElem> rc = r.c_;
    for (int i = 0; i <= d.degree(); ++i) rc[i + shift] = rc[i + shift] - c * d.c_[i];
    r = NFPoly(field_, std::move(rc));
  }
  return {NFPoly(field_, std::move(q)), r};
}

NFPoly NFPoly::monic() const {
  if (is_zero()) throw std::domain_error("monic() of zero polynomial");
  return *this * c_.back().inverse();
}

NFPoly NFPoly::derivative() const {
  if (c_.size() <= 1) return NFPoly(field_);
  std::vector<NFElem> v;
  v.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    v.push_back(c_[i] * Rational(static_cast<long>(i)));
  return NFPoly(field_, std::move(v));
}

NFElem NFPoly::eval(const NFElem& t) const {
  NFElem acc = field_->zero();
  for (int i = degree(); i >= 0; --i) acc = acc * t + c_[i];
  return acc;
}

NFPoly NFPoly::compose(const NFPoly& inner) const {
  NFPoly acc(field_);
  for (int i = degree(); i >= 0; --i) {
    acc = acc * inner + NFPoly(field_, {c_[i]});
  }
  return acc;
}

NFPoly NFPoly::map_coeffs(const std::function<NFElem(const NFElem&)>& fn) const {
  std::vector<NFElem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(fn(c));
  NumberFieldPtr target = v.empty() ? field_ : v.front().field();
  return NFPoly(target, std::move(v));
}

NFPoly gcd(const NFPoly& a, const NFPoly& b) {
  NFPoly x = a, y = b;
  while (!y.is_zero()) {
    NFPoly r = x.divmod(y.monic()).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

// ---------------------------------------------------------------------------
// Trager factorization over a number field
// ---------------------------------------------------------------------------

namespace {

bool nfpoly_less(const NFPoly& a, const NFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto c = a.coeff(i) <=> b.coeff(i);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
  }
  return false;
}

// Norm of a monic polynomial over K down to Q[y], by interpolation of
// resultants: N(t) = Res_x(f(x), rep of w(t)) at deg(f)*deg(w)+1 sample points.
RationalPoly norm_of_poly(const NFPoly& w) {
  const NumberFieldPtr& K = w.field();
  int D = K->degree() * w.degree();
  std::vector<Rational> xs, ys;
  xs.reserve(D + 1);
  ys.reserve(D + 1);
  long t = 0;
  while (static_cast<int>(xs.size()) <= D) {
    Rational node(t);
    NFElem val = w.eval(K->from_rational(node));
    xs.push_back(node);
    ys.push_back(resultant(K->poly(), val.rep()));
    t = t > 0 ? -t : -t + 1;  // 0, 1, -1, 2, -2, ...
  }
  return interpolate(xs, ys);
}

// Factor a monic squarefree polynomial over K.
std::vector<NFPoly> trager_squarefree(const NFPoly& w) {
  const NumberFieldPtr& K = w.field();
  if (w.degree() <= 1) return {w};
  if (K->degree() == 1) {
    // Base field is Q; coefficients are rational constants.
    std::vector<Rational> rc(w.degree() + 1);
    for (int i = 0; i <= w.degree(); ++i) rc[i] = w.coeff(i).as_rational();
    std::vector<NFPoly> out;
    for (const auto& [fac, mult] : factor_rational_polynomial(RationalPoly(rc)).factors) {
      (void)mult;  // squarefree input
      out.push_back(NFPoly::from_rational_poly(K, fac));
    }
    return out;
  }

  NFElem alpha = K->generator();
  long c = 0;
  for (int attempt = 0; attempt < 200; ++attempt) {
    // w_c(y) = w(y - c*alpha)
    NFPoly shift(K, {alpha * Rational(-c), K->one()});
    NFPoly wc = w.compose(shift);
    RationalPoly norm = norm_of_poly(wc);
    // A modular certificate is enough here: a rejected shift only advances the
    // loop, and a squarefree norm has certifying primes in abundance.
    if (certified_squarefree(norm)) {
      std::vector<NFPoly> out;
      NFPoly unshift(K, {alpha * Rational(c), K->one()});
      for (const auto& [H, mult] : factor_rational_polynomial(norm).factors) {
        (void)mult;
        NFPoly G = gcd(wc, NFPoly::from_rational_poly(K, H));
        if (G.degree() >= 1) out.push_back(G.compose(unshift).monic());
      }
      int degsum = 0;
      for (const auto& f : out) degsum += f.degree();
      if (degsum != w.degree())
        throw std::logic_error("norm factorization did not account for all factors");
      std::sort(out.begin(), out.end(), nfpoly_less);
      return out;
    }
    c = c > 0 ? -c : -c + 1;
  }
  throw std::logic_error("no squarefree norm shift found");
}

}  // namespace

std::vector<NFPolyFactor> factor_over_field(const NFPoly& h) {
  if (h.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<NFPolyFactor> out;
  if (h.degree() == 0) return out;
  NFPoly hm = h.monic();
  // Yun decomposition inline (characteristic zero).
  NFPoly d = hm.derivative();
  NFPoly g = gcd(hm, d);
  NFPoly w = hm.divmod(g).first;
  NFPoly y = d.divmod(g).first;
  NFPoly z = y - w.derivative();
  int mult = 1;
  while (w.degree() > 0) {
    NFPoly part = gcd(w, z);
    if (part.degree() > 0) {
      for (NFPoly& irred : trager_squarefree(part)) out.push_back({std::move(irred), mult});
    }
    w = w.divmod(part).first;
    y = z.divmod(part).first;
    z = y - w.derivative();
    ++mult;
  }
  std::sort(out.begin(), out.end(), [](const NFPolyFactor& a, const NFPolyFactor& b) {
    return nfpoly_less(a.factor, b.factor);
  });
  return out;
}

std::vector<NFElem> roots_in_field(const NFPoly& h) {
  std::vector<NFElem> roots;
  for (const auto& [factor, mult] : factor_over_field(h)) {
    (void)mult;
    if (factor.degree() == 1) roots.push_back(-factor.coeff(0));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<FieldAutomorphism> field_automorphisms(const NumberFieldPtr& K) {
  {
    std::lock_guard<std::mutex> lock(K->aut_mutex_);
    if (K->aut_images_) {
      std::vector<FieldAutomorphism> out;
      for (const NFElem& img : *K->aut_images_) out.emplace_back(K, img);
      return out;
    }
  }
  std::vector<NFElem> images;
  if (K->degree() == 1) {
    images.push_back(K->generator());
  } else {
    NFPoly f = NFPoly::from_rational_poly(K, K->poly());
    images = roots_in_field(f);
    // identity first, remainder in canonical order
    auto id = std::find_if(images.begin(), images.end(),
                           [](const NFElem& e) { return e.rep() == RationalPoly::x(); });
    if (id == images.end()) throw std::logic_error("generator missing from its own roots");
    std::rotate(images.begin(), id, id + 1);
    std::sort(images.begin() + 1, images.end());
  }
  {
    std::lock_guard<std::mutex> lock(K->aut_mutex_);
    if (!K->aut_images_) K->aut_images_ = images;
  }
  std::vector<FieldAutomorphism> out;
  for (const NFElem& img : images) out.emplace_back(K, img);
  return out;
}

RationalPoly minimal_polynomial(const NFElem& e) {
  const NumberFieldPtr& K = e.field();
  int d = K->degree();
  std::vector<std::vector<Rational>> pow_vectors;
  NFElem p = K->one();
  pow_vectors.push_back(element_vector(p, d));
  for (int k = 1; k <= d; ++k) {
    p = p * e;
    std::vector<Rational> target = element_vector(p, d);
    if (auto sol = solve_linear(pow_vectors, target)) {
      std::vector<Rational> coeffs(k + 1, Rational(0));
      for (int i = 0; i < k; ++i) coeffs[i] = -(*sol)[i];
      coeffs[k] = 1;
      return RationalPoly(std::move(coeffs));
    }
    pow_vectors.push_back(std::move(target));
  }
  throw std::logic_error("minimal polynomial not found within field degree");
}

std::optional<RationalPoly> express_in_powers(const NFElem& e, const NFElem& t) {
  const NumberFieldPtr& K = e.field();
  if (!K->same_field(*t.field())) throw std::domain_error("elements from different fields");
  int d = K->degree();
  int k = minimal_polynomial(t).degree();
  std::vector<std::vector<Rational>> cols;
  NFElem p = K->one();
  for (int i = 0; i < k; ++i) {
    cols.push_back(element_vector(p, d));
    p = p * t;
  }
  auto sol = solve_linear(cols, element_vector(e, d));
  if (!sol) return std::nullopt;
  return RationalPoly(std::move(*sol));
}

SubfieldResult subfield_generated(const NumberFieldPtr& K, const std::vector<NFElem>& elems) {
  NFElem gen = K->zero();
  for (const NFElem& e : elems) {
    if (!K->same_field(*e.field())) throw std::domain_error("element outside the ambient field");
    if (express_in_powers(e, gen)) continue;
    if (gen.is_zero()) {
      gen = e;
      continue;
    }
    bool found = false;
    long c = 1;
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
      NFElem candidate = gen + e * Rational(c);
      if (express_in_powers(gen, candidate) && express_in_powers(e, candidate)) {
        gen = candidate;
        found = true;
      }
      c = c > 0 ? -c : -c + 1;
    }
    if (!found) throw std::logic_error("no primitive element found for subfield");
  }
  RationalPoly m = minimal_polynomial(gen);
  return {NumberField::make_unchecked(std::move(m)), gen};
}

CompositumResult compositum(const NumberFieldPtr& K1, const NumberFieldPtr& K2) {
  // Identical presentations compose to the left field itself: both embeddings
  // are the identity-conjugate choice (the generator maps to the generator).
  if (K1->poly() == K2->poly()) {
    return {K1, FieldEmbedding(K1, K1, K1->generator()),
            FieldEmbedding(K2, K1, K1->generator())};
  }
  if (K1->degree() == 1)
    return {K2, FieldEmbedding(K1, K2, K2->zero()), FieldEmbedding(K2, K2, K2->generator())};
  if (K2->degree() == 1)
    return {K1, FieldEmbedding(K1, K1, K1->generator()), FieldEmbedding(K2, K1, K1->zero())};

  // Factor f2 over K1 and adjoin a root of the canonically smallest factor
  // of minimal degree.
  NFPoly f2 = NFPoly::from_rational_poly(K1, K2->poly());
  std::vector<NFPolyFactor> factors = factor_over_field(f2);
  const NFPoly* chosen = &factors.front().factor;  // sorted: minimal degree, smallest
  if (chosen->degree() == 1) {
    NFElem beta = -chosen->coeff(0);
    return {K1, FieldEmbedding(K1, K1, K1->generator()), FieldEmbedding(K2, K1, beta)};
  }

  // Relative extension L = K1[y]/(g); find a primitive element theta = beta + c*alpha.
  const NFPoly& g = *chosen;
  int d1 = K1->degree();
  int dg = g.degree();
  int D = d1 * dg;
  NFElem alpha = K1->generator();

  auto rel_mul = [&](const NFPoly& a, const NFPoly& b) { return (a * b).divmod(g).second; };
  auto flatten = [&](const NFPoly& a) {
    std::vector<Rational> v(static_cast<size_t>(D), Rational(0));
    for (int j = 0; j < dg; ++j) {
      NFElem cj = a.coeff(j);
      for (int i = 0; i <= cj.rep().degree(); ++i) v[j * d1 + i] = cj.rep().coeff(i);
    }
    return v;
  };

  long c = 1;
  for (int attempt = 0; attempt < 200; ++attempt) {
    // theta = y + c*alpha in the relative presentation
    NFPoly theta(K1, {alpha * Rational(c), K1->one()});
    std::vector<std::vector<Rational>> pow_vectors;
    std::vector<NFPoly> pows;
    NFPoly p(K1, {K1->one()});
    bool primitive = true;
    for (int k = 0; k < D; ++k) {
      std::vector<Rational> v = flatten(p);
      if (k > 0 && solve_linear(pow_vectors, v)) {
        primitive = false;  // dependency before full degree: theta not primitive
        break;
      }
      pow_vectors.push_back(std::move(v));
      pows.push_back(p);
      p = rel_mul(p, theta);
    }
    if (primitive) {
      std::vector<Rational> top = flatten(p);  // theta^D
      auto sol = solve_linear(pow_vectors, top);
      if (!sol) throw std::logic_error("compositum: power basis inconsistent");
      std::vector<Rational> mc(D + 1, Rational(0));
      for (int i = 0; i < D; ++i) mc[i] = -(*sol)[i];
      mc[D] = 1;
      NumberFieldPtr L = NumberField::make_unchecked(RationalPoly(std::move(mc)));
      // alpha in powers of theta
      NFPoly alpha_rel(K1, {alpha});
      auto alpha_sol = solve_linear(pow_vectors, flatten(alpha_rel));
      if (!alpha_sol) throw std::logic_error("compositum: alpha not in theta powers");
      NFElem alpha_img = L->element(RationalPoly(std::move(*alpha_sol)));
      NFElem beta_img = L->generator() - alpha_img * Rational(c);
      FieldEmbedding e1(K1, L, alpha_img);
      FieldEmbedding e2(K2, L, beta_img);
      return {L, e1, e2};
    }
    c = c > 0 ? -c : -c + 1;
  }
  throw std::logic_error("compositum: no primitive element found");
}

}  // namespace twistkit
