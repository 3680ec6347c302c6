#include "qlink/tensor.hpp"

#include <stdexcept>

namespace qlink {

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
  return m;
}

Matrix Matrix::diagonal(const std::vector<LaurentPoly>& d) {
  Matrix m(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

bool Matrix::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::pow(int k) const {
  if (k < 0) {
    auto inv = inverse(*this);
    if (!inv) throw std::domain_error("matrix power: not invertible over Z[q,q^-1]");
    return inv->pow(-k);
  }
  Matrix result = identity(n_);
  Matrix base = *this;
  while (k != 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("matrix size mismatch");
  const int n = x.n_;
  Matrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const LaurentPoly& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (!y(k, j).is_zero()) r(i, j).add_product(xik, y(k, j));
      }
    }
  }
  return r;
}

LaurentPoly determinant(const Matrix& m) {
  const int n = m.size();
  if (n == 0) return LaurentPoly(1);
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  LaurentPoly prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!a[r][k].is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return LaurentPoly();
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto quo = num.divide_exact(prev);
        // Bareiss guarantees exactness in an integral domain.
        if (!quo) throw std::logic_error("Bareiss step not exact");
        a[i][j] = std::move(*quo);
      }
      a[i][k] = LaurentPoly();
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::optional<Matrix> inverse(const Matrix& m) {
  const int n = m.size();
  if (m.is_diagonal()) {
    Matrix r(n);
    for (int i = 0; i < n; ++i) {
      auto u = m(i, i).as_unit();
      if (!u) return std::nullopt;
      r(i, i) = LaurentPoly::monomial(u->first, -u->second);
    }
    return r;
  }
  const LaurentPoly det = determinant(m);
  if (det.is_zero()) return std::nullopt;
  Matrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Cofactor C_ji goes to r(i, j).
      Matrix minor(n - 1);
      for (int a = 0, ra = 0; a < n; ++a) {
        if (a == j) continue;
        for (int b = 0, rb = 0; b < n; ++b) {
          if (b == i) continue;
          minor(ra, rb++) = m(a, b);
        }
        ++ra;
      }
      LaurentPoly c = determinant(minor);
      if ((i + j) % 2 == 1) c = -c;
      auto quo = c.divide_exact(det);
      if (!quo) return std::nullopt;
      r(i, j) = std::move(*quo);
    }
  }
  if (!(m * r).is_identity()) return std::nullopt;
  return r;
}

Tensor4 Tensor4::identity(int n) {
  Tensor4 t(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t(i, j, i, j) = LaurentPoly(1);
  }
  return t;
}

std::optional<std::array<int, 4>> first_difference(const Tensor4& x, const Tensor4& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("tensor size mismatch");
  const int n = x.n_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (x(i, j, k, l) != y(i, j, k, l)) return std::array<int, 4>{i, j, k, l};
  return std::nullopt;
}

Tensor4 matmul(const Tensor4& x, const Tensor4& y) {
  if (x.size() != y.size()) throw std::invalid_argument("tensor size mismatch");
  const int n = x.size();
  Tensor4 r(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int m = 0; m < n; ++m)
        for (int p = 0; p < n; ++p) {
          const LaurentPoly& xv = x(a, b, m, p);
          if (xv.is_zero()) continue;
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d)
              if (!y(m, p, c, d).is_zero()) r(a, b, c, d).add_product(xv, y(m, p, c, d));
        }
  return r;
}

}  // namespace qlink
