/*
   Copyright 2026 The qh Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QH_MATRIX_HPP
#define QH_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "qh/multipoly.hpp"
#include "qh/rational.hpp"
#include "qh/unipoly.hpp"

namespace qh {

/// Dense rectangular matrix over an exact commutative ring (Rational,
/// MultiPoly, or any type with +, -, *, isZero()).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return e_.at(i * cols_ + j); }
  const T& operator()(std::size_t i, std::size_t j) const { return e_.at(i * cols_ + j); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).isZero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> e_;
};

/// Characteristic polynomial det(tI - A) by the division-free Berkowitz
/// algorithm; works over any commutative ring. Coefficients returned
/// lowest degree first, leading coefficient 1.
template <class T>
std::vector<T> berkowitzCharpoly(const Matrix<T>& a) {
  if (!a.square()) throw std::invalid_argument("charpoly: matrix not square");
  std::size_t n = a.rows();
  // coefficients held leading-first during the recursion
  std::vector<T> c{T(1)};
  for (std::size_t r = 1; r <= n; ++r) {
    // Toeplitz column: 1, -a_rr, -(R M^k C) for the leading principal block M
    std::vector<T> s(r + 1);
    s[0] = T(1);
    s[1] = -a(r - 1, r - 1);
    std::vector<T> v(r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i) v[i] = a(i, r - 1);
    for (std::size_t k = 2; k <= r; ++k) {
      T dot = T(0);
      for (std::size_t i = 0; i + 1 < r; ++i) dot += a(r - 1, i) * v[i];
      s[k] = -dot;
      if (k == r) break;
      std::vector<T> nv(r - 1);
      for (std::size_t i = 0; i + 1 < r; ++i) {
        for (std::size_t j = 0; j + 1 < r; ++j) nv[i] += a(i, j) * v[j];
      }
      v = std::move(nv);
    }
    std::vector<T> nc(r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
      for (std::size_t j = 0; j < c.size() && j <= i; ++j) {
        if (i - j <= r) nc[i] += s[i - j] * c[j];
      }
    }
    c = std::move(nc);
  }
  std::vector<T> ascending(c.rbegin(), c.rend());
  return ascending;
}

/// Determinant via Berkowitz: det A = (-1)^n chi(0).
template <class T>
T berkowitzDet(const Matrix<T>& a) {
  auto chi = berkowitzCharpoly(a);
  T d = chi.front();
  if (a.rows() % 2 == 1) d = -d;
  return d;
}

/// Fraction-free Bareiss determinant for rational matrices.
Rational bareissDet(const Matrix<Rational>& a);

/// Exact Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& a);

/// Rank over the rationals.
std::size_t rank(Matrix<Rational> a);

UniPoly charpoly(const Matrix<Rational>& a);

}  // namespace qh

#endif  // QH_MATRIX_HPP
