/*
   Copyright 2026 The tmeasure Authors

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

#ifndef TMEASURE_LINALG_HPP
#define TMEASURE_LINALG_HPP

#include <Eigen/Core>
#include <cstddef>
#include <utility>
#include <vector>

#include "tmeasure/polynomial.hpp"

namespace tmeasure {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Fraction-free (Bareiss) determinant over an integral domain with exact
/// division. Pivots on the first nonzero entry of the current column.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::DomainError, "determinant of a non-square matrix");
  if (n == 0) throw Error(ErrorCode::DomainError, "determinant of an empty matrix");
  bool negate = false;
  bool have_prev = false;
  Scalar prev{};
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && detail::scalar_is_zero(m(pivot, k))) ++pivot;
    if (pivot == n) return Scalar{};
    if (pivot != k) {
      m.row(pivot).swap(m.row(k));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = have_prev ? Scalar(t / prev) : std::move(t);
      }
      m(i, k) = Scalar{};
    }
    prev = m(k, k);
    have_prev = true;
  }
  Scalar d = m(n - 1, n - 1);
  return negate ? Scalar(Scalar{} - d) : d;
}

/// Basis of the right kernel {v : m v = 0} over a field, via reduced row
/// echelon form. Each basis vector has a 1 in its free column.
template <typename Scalar>
std::vector<Vector<Scalar>> nullspace(Matrix<Scalar> m, const Scalar& one) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && detail::scalar_is_zero(m(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    Scalar inv = one / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || detail::scalar_is_zero(m(i, c))) continue;
      Scalar f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vector<Scalar>> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v(cols);
    for (Eigen::Index j = 0; j < cols; ++j) v(j) = Scalar{};
    v(free) = one;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      v(pivot_cols[i]) = Scalar{} - m(static_cast<Eigen::Index>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tmeasure

#endif  // TMEASURE_LINALG_HPP
