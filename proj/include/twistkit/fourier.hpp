#pragma once

#include <compare>
#include <complex>
#include <map>
#include <vector>

#include "twistkit/exact_matrix.hpp"
#include "twistkit/number_field.hpp"
#include "twistkit/symplectic.hpp"

namespace twistkit {

// Symmetric positive semidefinite index matrix for a degree-g Fourier
// expansion: rational entries with integral diagonal and half-integral
// off-diagonal. Internally stored as 2A, which is an integer matrix with
// even diagonal, so all tests are exact integer arithmetic.
class HalfIntegralMatrix {
 public:
  // The zero matrix of the given size (size 0 = the unique genus-0 index).
  explicit HalfIntegralMatrix(int size);
  // Validates symmetry, integral diagonal, half-integral off-diagonal.
  static HalfIntegralMatrix from_rational(const RationalMatrix& A);
  // Construct directly from 2A (integer symmetric, even diagonal).
  static HalfIntegralMatrix from_twice(std::vector<std::vector<Integer>> twice);

  int size() const { return n_; }
  const Integer& twice_at(int i, int j) const { return t_[static_cast<size_t>(i) * n_ + j]; }
  Rational at(int i, int j) const { return Rational(twice_at(i, j)) / 2; }
  RationalMatrix to_rational() const;

  Integer trace() const;  // integral since the diagonal of A is integral
  bool is_zero() const;
  bool is_psd() const;                // every principal minor of 2A is >= 0
  bool is_positive_definite() const;  // leading principal minors of 2A all > 0

  // Whether the last row and column vanish (so the index survives the
  // degree-lowering operator).
  bool last_row_col_zero() const;
  HalfIntegralMatrix drop_last() const;  // delete the last row and column

  std::strong_ordering operator<=>(const HalfIntegralMatrix& o) const;
  bool operator==(const HalfIntegralMatrix& o) const = default;

 private:
  int n_ = 0;
  std::vector<Integer> t_;  // row-major entries of 2A
};

// All psd half-integral g x g indices with trace <= tmax, sorted.
std::vector<HalfIntegralMatrix> psd_indices_up_to_trace(int genus, long tmax);

// A truncated Fourier expansion sum_A t(A) e^{2 pi i tr(A tau)} over psd
// half-integral indices A with trace(A) <= bound. Coefficients live in a
// common number field.
class SiegelFourierExpansion {
 public:
  SiegelFourierExpansion(int genus, long bound, NumberFieldPtr coeff_field);

  int genus() const { return genus_; }
  long bound() const { return bound_; }
  const NumberFieldPtr& coeff_field() const { return field_; }
  const std::map<HalfIntegralMatrix, NFElem>& terms() const { return terms_; }

  // Validates that A is psd of the right size with trace <= bound; zero
  // values erase the term.
  void set(const HalfIntegralMatrix& A, NFElem value);
  NFElem coefficient(const HalfIntegralMatrix& A) const;  // zero if absent

  SiegelFourierExpansion plus(const SiegelFourierExpansion& o) const;
  SiegelFourierExpansion scaled(const NFElem& c) const;

  // Numerical evaluation sum t(A) e^{2 pi i tr(A tau)} at a half-space point.
  // Coefficients are embedded into C by sending the field generator to
  // generator_image.
  std::complex<double> evaluate(const SiegelPoint& tau,
                                std::complex<double> generator_image) const;

  // The degree-lowering operator: keep indices whose last row and column
  // vanish, delete that row/column. Genus 1 drops to genus 0, whose
  // expansions are indexed by the unique 0 x 0 matrix.
  SiegelFourierExpansion phi() const;

  // True when every retained index is positive definite, i.e. the truncation
  // is consistent with being a cusp form (all singular-index coefficients
  // vanish).
  bool is_cusp_truncated() const;

 private:
  int genus_;
  long bound_;
  NumberFieldPtr field_;
  std::map<HalfIntegralMatrix, NFElem> terms_;
};

}  // namespace twistkit
