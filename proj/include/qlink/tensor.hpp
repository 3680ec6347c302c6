#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qlink/laurent.hpp"

namespace qlink {

/// Square N x N matrix over Z[q, q^-1], row-major, 0-based.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<LaurentPoly>& d);

  int size() const noexcept { return n_; }
  LaurentPoly& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const LaurentPoly& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  bool is_identity() const;
  bool is_diagonal() const;
  Matrix transpose() const;
  Matrix pow(int k) const;  // negative k needs an inverse; see inverse()

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

 private:
  int n_ = 0;
  std::vector<LaurentPoly> a_;
};

/// Determinant by fraction-free (Bareiss) elimination.
LaurentPoly determinant(const Matrix& m);

/// Exact inverse over Z[q, q^-1]: adjugate divided by the determinant,
/// then checked by multiplication. Empty when some entry of the inverse is
/// not a Laurent polynomial (or the matrix is singular).
std::optional<Matrix> inverse(const Matrix& m);

/// 4-index tensor T[i][j][k][l], each index in 0..N-1. Viewed as an
/// N^2 x N^2 matrix with row (i,j) -> i*N + j and column (k,l).
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), a_(static_cast<std::size_t>(n) * n * n * n) {}

  static Tensor4 identity(int n);  // delta(i,k) delta(j,l)

  int size() const noexcept { return n_; }
  std::size_t index(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  LaurentPoly& operator()(int i, int j, int k, int l) { return a_[index(i, j, k, l)]; }
  const LaurentPoly& operator()(int i, int j, int k, int l) const { return a_[index(i, j, k, l)]; }

  friend bool operator==(const Tensor4& x, const Tensor4& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Tensor4& x, const Tensor4& y) { return !(x == y); }

  /// Lexicographically first index where the tensors differ.
  friend std::optional<std::array<int, 4>> first_difference(const Tensor4& x, const Tensor4& y);

 private:
  int n_ = 0;
  std::vector<LaurentPoly> a_;
};

/// Matrix product of two tensors viewed as N^2 x N^2 matrices.
Tensor4 matmul(const Tensor4& x, const Tensor4& y);

}  // namespace qlink
