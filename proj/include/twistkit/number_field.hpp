#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "twistkit/poly.hpp"

namespace twistkit {

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

// Element of Q[x]/(f), stored as its reduced representative (degree < deg f).
// Elements are immutable values; arithmetic requires structurally equal parents
// (same defining polynomial).
class NFElem {
 public:
  NFElem() = default;  // detached null element; usable only after assignment
  NFElem(NumberFieldPtr field, RationalPoly rep);

  const NumberFieldPtr& field() const { return field_; }
  const RationalPoly& rep() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const;
  bool is_rational() const { return rep_.is_constant(); }
  Rational as_rational() const;  // requires is_rational()

  NFElem operator-() const;
  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator*(const NFElem& o) const;
  NFElem operator/(const NFElem& o) const;  // o must be nonzero
  NFElem inverse() const;                   // must be nonzero
  NFElem pow(long e) const;                 // negative allowed for nonzero elements
  NFElem operator*(const Rational& s) const;

  bool operator==(const NFElem& o) const;
  std::strong_ordering operator<=>(const NFElem& o) const;  // canonical (rep) order

  // Multiplicative order if this is a root of unity, nullopt otherwise.
  // Searches orders up to the given cap.
  std::optional<long> multiplicative_order(long cap = 256) const;

 private:
  void require_same_field(const NFElem& o) const;
  NumberFieldPtr field_;
  RationalPoly rep_;
};

// Q[x]/(f) for monic irreducible f. Instances are immutable and shared.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  // Verifies monic and irreducible (degree >= 1); throws std::domain_error.
  static NumberFieldPtr make(RationalPoly f);
  // Trusted constructor for polynomials already known irreducible
  // (minimal polynomials, factors returned by the factorizer).
  static NumberFieldPtr make_unchecked(RationalPoly f);
  // Q presented as Q[x]/(x).
  static NumberFieldPtr rationals();

  int degree() const { return f_.degree(); }
  const RationalPoly& poly() const { return f_; }
  bool same_field(const NumberField& o) const { return f_ == o.f_; }

  NFElem zero() const;
  NFElem one() const;
  NFElem generator() const;
  NFElem from_rational(const Rational& q) const;
  NFElem element(RationalPoly rep) const;  // reduces mod f

 private:
  explicit NumberField(RationalPoly f) : f_(std::move(f)) {}
  RationalPoly f_;

  mutable std::mutex aut_mutex_;
  mutable std::optional<std::vector<NFElem>> aut_images_;  // cached automorphism images
  friend std::vector<class FieldAutomorphism> field_automorphisms(const NumberFieldPtr&);
};

// Field automorphism K -> K determined by the image of the generator.
class FieldAutomorphism {
 public:
  FieldAutomorphism(NumberFieldPtr field, NFElem gen_image);
  const NumberFieldPtr& field() const { return field_; }
  const NFElem& gen_image() const { return image_; }
  bool is_identity() const;
  NFElem operator()(const NFElem& e) const;
  FieldAutomorphism compose(const FieldAutomorphism& inner) const;  // this after inner
  FieldAutomorphism inverse() const;
  bool operator==(const FieldAutomorphism& o) const;
  std::strong_ordering operator<=>(const FieldAutomorphism& o) const;

 private:
  NumberFieldPtr field_;
  NFElem image_;
};

// Embedding of one field into another, determined by the image of the
// source generator (which must be a root of the source polynomial).
class FieldEmbedding {
 public:
  FieldEmbedding(NumberFieldPtr from, NumberFieldPtr to, NFElem gen_image);
  const NumberFieldPtr& from() const { return from_; }
  const NumberFieldPtr& to() const { return to_; }
  const NFElem& gen_image() const { return image_; }
  NFElem operator()(const NFElem& e) const;

 private:
  NumberFieldPtr from_, to_;
  NFElem image_;
};

// Univariate polynomial over a number field, coefficients ascending, trimmed.
class NFPoly {
 public:
  explicit NFPoly(NumberFieldPtr field);
  NFPoly(NumberFieldPtr field, std::vector<NFElem> coeffs);
  static NFPoly from_rational_poly(const NumberFieldPtr& field, const RationalPoly& p);

  const NumberFieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  NFElem coeff(int i) const;  // zero beyond degree
  const std::vector<NFElem>& coeffs() const { return c_; }

  NFPoly operator-() const;
  NFPoly operator+(const NFPoly& o) const;
  NFPoly operator-(const NFPoly& o) const;
  NFPoly operator*(const NFPoly& o) const;
  NFPoly operator*(const NFElem& s) const;
  bool operator==(const NFPoly& o) const;
  std::pair<NFPoly, NFPoly> divmod(const NFPoly& d) const;
  NFPoly monic() const;
  NFPoly derivative() const;
  NFElem eval(const NFElem& t) const;
  NFPoly compose(const NFPoly& inner) const;
  // Applies a map to every coefficient (automorphism or compatible embedding).
  NFPoly map_coeffs(const std::function<NFElem(const NFElem&)>& fn) const;

 private:
  void trim();
  NumberFieldPtr field_;
  std::vector<NFElem> c_;
};

NFPoly gcd(const NFPoly& a, const NFPoly& b);  // monic or zero

struct NFPolyFactor {
  NFPoly factor;  // monic irreducible over the field
  int multiplicity = 1;
};

// Trager factorization: squarefree shifts, norms via resultants, rational
// factorization of the norm, gcd extraction over the field.
std::vector<NFPolyFactor> factor_over_field(const NFPoly& h);

// Roots in the field, i.e. negated constant terms of the linear factors.
std::vector<NFElem> roots_in_field(const NFPoly& h);

// All automorphisms of K (identity first, canonical order). Size equals the
// degree exactly when K/Q is Galois.
std::vector<FieldAutomorphism> field_automorphisms(const NumberFieldPtr& K);

// Monic minimal polynomial of e over Q (exact linear algebra on the power basis).
RationalPoly minimal_polynomial(const NFElem& e);

// Writes e as a polynomial of minimal degree in t, if e lies in Q(t).
std::optional<RationalPoly> express_in_powers(const NFElem& e, const NFElem& t);

struct SubfieldResult {
  NumberFieldPtr subfield;   // abstract presentation Q[y]/(m)
  NFElem generator_image;    // image of y in the ambient field
};

// Smallest subfield of K containing the given elements, with its embedding.
// Empty input yields Q.
SubfieldResult subfield_generated(const NumberFieldPtr& K, const std::vector<NFElem>& elems);

struct CompositumResult {
  NumberFieldPtr field;
  FieldEmbedding left, right;
};

// Compositum with embeddings of both inputs. When the defining polynomials
// coincide the result is the left field with identity-conjugate embeddings.
CompositumResult compositum(const NumberFieldPtr& K1, const NumberFieldPtr& K2);

// Horner evaluation of a rational polynomial at a field element.
NFElem eval_rational_poly(const RationalPoly& p, const NFElem& e);

}  // namespace twistkit
