#pragma once

#include <vector>

#include "twistkit/poly.hpp"

namespace twistkit {

// Dense matrix over Q. Small fixed sizes (2g x 2g for g <= 3 in practice),
// so plain Gaussian elimination over mpq is adequate everywhere.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(std::vector<std::vector<Rational>> rows);
  static RationalMatrix from_blocks(const RationalMatrix& A, const RationalMatrix& B,
                                    const RationalMatrix& C, const RationalMatrix& D);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator*(const Rational& s) const;
  bool operator==(const RationalMatrix& o) const;

  RationalMatrix transpose() const;
  RationalMatrix block(int i0, int j0, int r, int c) const;
  bool is_integral() const;
  Rational trace() const;           // square only
  Rational det() const;             // square only
  RationalMatrix inverse() const;   // throws std::domain_error when singular
  RationalPoly charpoly() const;    // monic, via the Faddeev-LeVerrier recurrence

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

}  // namespace twistkit
