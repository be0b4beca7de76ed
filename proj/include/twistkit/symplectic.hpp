#pragma once

#include <Eigen/Dense>
#include <complex>

#include "twistkit/exact_matrix.hpp"

namespace twistkit {

// The standard antisymmetric form J of genus g: [[0, I_g], [-I_g, 0]].
RationalMatrix standard_J(int genus);

// For M with M^T J M = mu * J, returns mu (never zero).  Throws
// std::domain_error if M is not a symplectic similitude.
Rational similitude_factor(const RationalMatrix& M);

// True iff M^T J M = J exactly.
bool is_symplectic(const RationalMatrix& M);

enum class CongruenceKind { full, principal, gamma0, gamma1 };

// Membership test for integral similitude-factor-1 matrices in the
// classical congruence subgroups of level N (principal: M = I mod N;
// gamma0: lower-left block = 0 mod N; gamma1: additionally both diagonal
// blocks = I mod N).
bool in_congruence_subgroup(const RationalMatrix& M, const Integer& N, CongruenceKind kind);

// diag(d^{-1} I_g, d I_g): the diamond similitude of factor 1 used to
// normalize nebentypus actions.  d must be nonzero.
RationalMatrix diamond_matrix(const Rational& d, int genus);

// Interleaved block embedding GL2 x GL2 -> GSp4 sending
// (g1, g2) with det g1 = det g2 to the similitude with rows
//   (a, 0, b, 0), (0, a', 0, b'), (c, 0, d, 0), (0, c', 0, d').
// Throws std::domain_error when the determinants differ.
RationalMatrix yoshida_embed(const RationalMatrix& g1, const RationalMatrix& g2);

// A point of the genus-g Siegel upper half space: a complex symmetric
// matrix with positive definite imaginary part.
class SiegelPoint {
 public:
  explicit SiegelPoint(Eigen::MatrixXcd tau);

  int genus() const { return static_cast<int>(tau_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return tau_; }

 private:
  Eigen::MatrixXcd tau_;
};

// The fractional-linear action tau -> (A tau + B)(C tau + D)^{-1} of a
// rational symplectic similitude with positive factor.
SiegelPoint moebius_action(const RationalMatrix& M, const SiegelPoint& tau);

// det(C tau + D)^{-k}, the weight-k scalar automorphy factor.
std::complex<double> automorphy_factor(const RationalMatrix& M, const SiegelPoint& tau, int weight);

}  // namespace twistkit
