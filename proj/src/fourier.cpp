#include "twistkit/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace twistkit {

namespace {

// Determinant of an integer submatrix of T selected by the index set `idx`,
// computed exactly over Q.
Rational selected_minor(const HalfIntegralMatrix& T, const std::vector<int>& idx) {
  int m = static_cast<int>(idx.size());
  RationalMatrix S(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) S.at(i, j) = Rational(T.twice_at(idx[i], idx[j]));
  return S.det();
}

}  // namespace

HalfIntegralMatrix::HalfIntegralMatrix(int size) : n_(size) {
  if (size < 0) throw std::invalid_argument("negative index size");
  t_.assign(static_cast<size_t>(size) * size, Integer(0));
}

HalfIntegralMatrix HalfIntegralMatrix::from_rational(const RationalMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("index matrix must be square");
  int n = A.rows();
  HalfIntegralMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!(A.at(i, j) == A.at(j, i))) throw std::invalid_argument("index matrix must be symmetric");
      Rational twice = A.at(i, j) * 2;
      if (twice.get_den() != 1)
        throw std::invalid_argument("off-diagonal entries must be half-integral");
      if (i == j && A.at(i, j).get_den() != 1)
        throw std::invalid_argument("diagonal entries must be integral");
      out.t_[static_cast<size_t>(i) * n + j] = twice.get_num();
    }
  return out;
}

HalfIntegralMatrix HalfIntegralMatrix::from_twice(std::vector<std::vector<Integer>> twice) {
  int n = static_cast<int>(twice.size());
  HalfIntegralMatrix out(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(twice[i].size()) != n)
      throw std::invalid_argument("index matrix must be square");
    for (int j = 0; j < n; ++j) out.t_[static_cast<size_t>(i) * n + j] = std::move(twice[i][j]);
  }
  for (int i = 0; i < n; ++i) {
    if (out.twice_at(i, i) % 2 != 0)
      throw std::invalid_argument("diagonal entries must be integral");
    for (int j = 0; j < i; ++j)
      if (out.twice_at(i, j) != out.twice_at(j, i))
        throw std::invalid_argument("index matrix must be symmetric");
  }
  return out;
}

RationalMatrix HalfIntegralMatrix::to_rational() const {
  RationalMatrix A(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) A.at(i, j) = at(i, j);
  return A;
}

Integer HalfIntegralMatrix::trace() const {
  Integer t(0);
  for (int i = 0; i < n_; ++i) t += twice_at(i, i);
  return t / 2;
}

bool HalfIntegralMatrix::is_zero() const {
  return std::all_of(t_.begin(), t_.end(), [](const Integer& v) { return v == 0; });
}

bool HalfIntegralMatrix::is_psd() const {
  // Positive semidefiniteness of a symmetric matrix needs every principal
  // minor nonnegative (leading minors alone do not suffice for psd).
  std::vector<int> idx;
  for (unsigned mask = 1; mask < (1u << n_); ++mask) {
    idx.clear();
    for (int i = 0; i < n_; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (selected_minor(*this, idx) < 0) return false;
  }
  return true;
}

bool HalfIntegralMatrix::is_positive_definite() const {
  std::vector<int> idx;
  for (int m = 1; m <= n_; ++m) {
    idx.push_back(m - 1);
    if (selected_minor(*this, idx) <= 0) return false;
  }
  return n_ > 0;
}

bool HalfIntegralMatrix::last_row_col_zero() const {
  if (n_ == 0) return false;
  for (int j = 0; j < n_; ++j)
    if (twice_at(n_ - 1, j) != 0 || twice_at(j, n_ - 1) != 0) return false;
  return true;
}

HalfIntegralMatrix HalfIntegralMatrix::drop_last() const {
  if (n_ == 0) throw std::domain_error("cannot drop a row from an empty index");
  HalfIntegralMatrix out(n_ - 1);
  for (int i = 0; i + 1 < n_; ++i)
    for (int j = 0; j + 1 < n_; ++j)
      out.t_[static_cast<size_t>(i) * (n_ - 1) + j] = twice_at(i, j);
  return out;
}

std::strong_ordering HalfIntegralMatrix::operator<=>(const HalfIntegralMatrix& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  Integer ta = trace(), tb = o.trace();
  if (ta != tb) return ta < tb ? std::strong_ordering::less : std::strong_ordering::greater;
  for (size_t k = 0; k < t_.size(); ++k)
    if (t_[k] != o.t_[k])
      return t_[k] < o.t_[k] ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<HalfIntegralMatrix> psd_indices_up_to_trace(int genus, long tmax) {
  if (genus < 0 || tmax < 0) throw std::invalid_argument("bad enumeration bounds");
  std::vector<HalfIntegralMatrix> out;
  if (genus == 0) {
    out.emplace_back(0);
    return out;
  }
  // Enumerate diagonals d_i >= 0 with sum <= tmax, then off-diagonal entries
  // of 2A bounded via the psd constraint (2A)_{ij}^2 <= (2A)_{ii} (2A)_{jj}.
  int pairs = genus * (genus - 1) / 2;
  std::vector<long> diag(genus, 0);
  std::vector<long> off(pairs, 0);
  auto emit_offdiag = [&](auto&& self, int pos) -> void {
    if (pos == pairs) {
      std::vector<std::vector<Integer>> twice(genus, std::vector<Integer>(genus));
      int k = 0;
      for (int i = 0; i < genus; ++i) twice[i][i] = Integer(2 * diag[i]);
      for (int i = 0; i < genus; ++i)
        for (int j = i + 1; j < genus; ++j, ++k) {
          twice[i][j] = Integer(off[k]);
          twice[j][i] = Integer(off[k]);
        }
      HalfIntegralMatrix A = HalfIntegralMatrix::from_twice(std::move(twice));
      if (A.is_psd()) out.push_back(std::move(A));
      return;
    }
    // Recover (i, j) for this linear position.
    int i = 0, j = 0, k = pos;
    for (i = 0; i < genus; ++i) {
      int row_pairs = genus - 1 - i;
      if (k < row_pairs) {
        j = i + 1 + k;
        break;
      }
      k -= row_pairs;
    }
    double cap = std::sqrt(static_cast<double>(4 * diag[i]) * static_cast<double>(diag[j]));
    long b = static_cast<long>(std::floor(cap + 1e-9));
    for (long v = -b; v <= b; ++v) {
      off[pos] = v;
      self(self, pos + 1);
    }
  };
  auto emit_diag = [&](auto&& self, int pos, long remaining) -> void {
    if (pos == genus) {
      emit_offdiag(emit_offdiag, 0);
      return;
    }
    for (long d = 0; d <= remaining; ++d) {
      diag[pos] = d;
      self(self, pos + 1, remaining - d);
    }
  };
  emit_diag(emit_diag, 0, tmax);
  std::sort(out.begin(), out.end());
  return out;
}

SiegelFourierExpansion::SiegelFourierExpansion(int genus, long bound, NumberFieldPtr coeff_field)
    : genus_(genus), bound_(bound), field_(std::move(coeff_field)) {
  if (genus < 0 || bound < 0) throw std::invalid_argument("bad expansion parameters");
  if (!field_) throw std::invalid_argument("expansion needs a coefficient field");
}

void SiegelFourierExpansion::set(const HalfIntegralMatrix& A, NFElem value) {
  if (A.size() != genus_) throw std::invalid_argument("index has the wrong genus");
  if (A.trace() > bound_) throw std::invalid_argument("index exceeds the truncation bound");
  if (genus_ > 0 && !A.is_psd())
    throw std::invalid_argument("index must be positive semidefinite");
  if (!field_->same_field(*value.field()))
    throw std::invalid_argument("coefficient lives in the wrong field");
  if (value.is_zero())
    terms_.erase(A);
  else
    terms_.insert_or_assign(A, std::move(value));
}

NFElem SiegelFourierExpansion::coefficient(const HalfIntegralMatrix& A) const {
  auto it = terms_.find(A);
  return it == terms_.end() ? field_->zero() : it->second;
}

SiegelFourierExpansion SiegelFourierExpansion::plus(const SiegelFourierExpansion& o) const {
  if (genus_ != o.genus_ || !field_->same_field(*o.field_))
    throw std::invalid_argument("expansions are not compatible");
  SiegelFourierExpansion out(genus_, std::min(bound_, o.bound_), field_);
  for (const auto& [A, v] : terms_)
    if (A.trace() <= out.bound_) out.set(A, v + o.coefficient(A));
  for (const auto& [A, v] : o.terms_)
    if (A.trace() <= out.bound_ && terms_.find(A) == terms_.end()) out.set(A, v);
  return out;
}

SiegelFourierExpansion SiegelFourierExpansion::scaled(const NFElem& c) const {
  SiegelFourierExpansion out(genus_, bound_, field_);
  if (c.is_zero()) return out;
  for (const auto& [A, v] : terms_) out.set(A, v * c);
  return out;
}

std::complex<double> SiegelFourierExpansion::evaluate(const SiegelPoint& tau,
                                                      std::complex<double> generator_image) const {
  if (tau.genus() != genus_) throw std::invalid_argument("genus mismatch");
  std::complex<double> total(0.0, 0.0);
  for (const auto& [A, v] : terms_) {
    // tr(A tau) with A recovered from its doubled integer form.
    std::complex<double> tr(0.0, 0.0);
    for (int i = 0; i < genus_; ++i)
      for (int j = 0; j < genus_; ++j)
        tr += 0.5 * A.twice_at(i, j).get_d() * tau.matrix()(j, i);
    // Horner evaluation of the coefficient at the chosen embedding.
    std::complex<double> cv(0.0, 0.0);
    const auto& rep = v.rep().coeffs();
    for (auto it = rep.rbegin(); it != rep.rend(); ++it) cv = cv * generator_image + it->get_d();
    total += cv * std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi) * tr);
  }
  return total;
}

SiegelFourierExpansion SiegelFourierExpansion::phi() const {
  if (genus_ == 0) throw std::domain_error("cannot lower the degree of a genus-0 expansion");
  SiegelFourierExpansion out(genus_ - 1, bound_, field_);
  for (const auto& [A, v] : terms_)
    if (A.last_row_col_zero()) out.set(A.drop_last(), v);
  return out;
}

bool SiegelFourierExpansion::is_cusp_truncated() const {
  for (const auto& [A, v] : terms_)
    if (!A.is_positive_definite()) return false;
  return true;
}

}  // namespace twistkit
