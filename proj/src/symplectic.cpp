#include "twistkit/symplectic.hpp"

#include <cmath>
#include <stdexcept>

namespace twistkit {

namespace {

constexpr double kSymmetryTol = 1e-9;
constexpr double kPositivityTol = 1e-10;

Eigen::MatrixXcd to_complex(const RationalMatrix& M) {
  Eigen::MatrixXcd out(M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) out(i, j) = std::complex<double>(M.at(i, j).get_d(), 0.0);
  return out;
}

bool congruent_mod(const Rational& a, const Rational& b, const Integer& N) {
  Rational d = a - b;
  if (d.get_den() != 1) return false;
  return d.get_num() % N == 0;
}

}  // namespace

RationalMatrix standard_J(int genus) {
  if (genus <= 0) throw std::invalid_argument("genus must be positive");
  RationalMatrix J(2 * genus, 2 * genus);
  for (int i = 0; i < genus; ++i) {
    J.at(i, genus + i) = 1;
    J.at(genus + i, i) = -1;
  }
  return J;
}

Rational similitude_factor(const RationalMatrix& M) {
  if (M.rows() != M.cols() || M.rows() % 2 != 0 || M.rows() == 0)
    throw std::domain_error("not a similitude: wrong shape");
  int g = M.rows() / 2;
  RationalMatrix J = standard_J(g);
  RationalMatrix T = M.transpose() * J * M;
  Rational mu = T.at(0, g);
  if (mu == 0 || !(T == J * mu)) throw std::domain_error("not a similitude");
  return mu;
}

bool is_symplectic(const RationalMatrix& M) {
  if (M.rows() != M.cols() || M.rows() % 2 != 0 || M.rows() == 0) return false;
  RationalMatrix J = standard_J(M.rows() / 2);
  return M.transpose() * J * M == J;
}

bool in_congruence_subgroup(const RationalMatrix& M, const Integer& N, CongruenceKind kind) {
  if (N <= 0) throw std::invalid_argument("level must be positive");
  if (!M.is_integral()) return false;
  if (similitude_factor(M) != 1) return false;
  if (kind == CongruenceKind::full) return true;
  int g = M.rows() / 2;
  auto block_is = [&](int i0, int j0, bool want_identity) {
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        Rational target = (want_identity && i == j) ? 1 : 0;
        if (!congruent_mod(M.at(i0 + i, j0 + j), target, N)) return false;
      }
    return true;
  };
  switch (kind) {
    case CongruenceKind::principal:
      return block_is(0, 0, true) && block_is(0, g, false) && block_is(g, 0, false) &&
             block_is(g, g, true);
    case CongruenceKind::gamma0:
      return block_is(g, 0, false);
    case CongruenceKind::gamma1:
      return block_is(g, 0, false) && block_is(0, 0, true) && block_is(g, g, true);
    default:
      return true;
  }
}

RationalMatrix diamond_matrix(const Rational& d, int genus) {
  if (d == 0) throw std::invalid_argument("diamond scalar must be nonzero");
  RationalMatrix M(2 * genus, 2 * genus);
  Rational dinv = Rational(1) / d;
  for (int i = 0; i < genus; ++i) {
    M.at(i, i) = dinv;
    M.at(genus + i, genus + i) = d;
  }
  return M;
}

RationalMatrix yoshida_embed(const RationalMatrix& g1, const RationalMatrix& g2) {
  if (g1.rows() != 2 || g1.cols() != 2 || g2.rows() != 2 || g2.cols() != 2)
    throw std::invalid_argument("factors must be 2x2");
  if (g1.det() != g2.det())
    throw std::domain_error("factors must have equal determinant");
  RationalMatrix M(4, 4);
  M.at(0, 0) = g1.at(0, 0);
  M.at(0, 2) = g1.at(0, 1);
  M.at(2, 0) = g1.at(1, 0);
  M.at(2, 2) = g1.at(1, 1);
  M.at(1, 1) = g2.at(0, 0);
  M.at(1, 3) = g2.at(0, 1);
  M.at(3, 1) = g2.at(1, 0);
  M.at(3, 3) = g2.at(1, 1);
  return M;
}

SiegelPoint::SiegelPoint(Eigen::MatrixXcd tau) : tau_(std::move(tau)) {
  if (tau_.rows() != tau_.cols() || tau_.rows() == 0)
    throw std::invalid_argument("half-space point must be square");
  if ((tau_ - tau_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol)
    throw std::invalid_argument("half-space point must be symmetric");
  Eigen::MatrixXd im = tau_.imag();
  im = 0.5 * (im + im.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(im);
  if (solver.info() != Eigen::Success || solver.eigenvalues().minCoeff() <= kPositivityTol)
    throw std::invalid_argument("imaginary part must be positive definite");
}

SiegelPoint moebius_action(const RationalMatrix& M, const SiegelPoint& tau) {
  Rational mu = similitude_factor(M);
  if (mu <= 0) throw std::domain_error("similitude factor must be positive to act on the half space");
  int g = M.rows() / 2;
  if (tau.genus() != g) throw std::invalid_argument("genus mismatch");
  Eigen::MatrixXcd A = to_complex(M.block(0, 0, g, g));
  Eigen::MatrixXcd B = to_complex(M.block(0, g, g, g));
  Eigen::MatrixXcd C = to_complex(M.block(g, 0, g, g));
  Eigen::MatrixXcd D = to_complex(M.block(g, g, g, g));
  const Eigen::MatrixXcd& t = tau.matrix();
  Eigen::MatrixXcd den = C * t + D;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(den);
  if (!lu.isInvertible()) throw std::domain_error("C tau + D is singular");
  Eigen::MatrixXcd out = (A * t + B) * lu.inverse();
  if ((out - out.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol)
    throw std::domain_error("action produced a non-symmetric matrix");
  out = 0.5 * (out + out.transpose());
  return SiegelPoint(out);
}

std::complex<double> automorphy_factor(const RationalMatrix& M, const SiegelPoint& tau,
                                       int weight) {
  int g = M.rows() / 2;
  if (tau.genus() != g) throw std::invalid_argument("genus mismatch");
  Eigen::MatrixXcd C = to_complex(M.block(g, 0, g, g));
  Eigen::MatrixXcd D = to_complex(M.block(g, g, g, g));
  std::complex<double> det = (C * tau.matrix() + D).determinant();
  if (std::abs(det) == 0.0) throw std::domain_error("C tau + D is singular");
  // Integer exponent by squaring so that no branch cut of a complex power
  // enters; weight is applied as det^{-weight}.
  std::complex<double> base = det;
  int e = weight;
  if (e < 0) {
    base = 1.0 / base;
    e = -e;
  }
  std::complex<double> p(1.0, 0.0);
  while (e > 0) {
    if (e & 1) p *= base;
    base *= base;
    e >>= 1;
  }
  return 1.0 / p;
}

}  // namespace twistkit
