#pragma once

// Small dense exact linear algebra: fraction-free determinant and the
// Möbius (inverse-zeta) matrix of a finite poset.

#include <cstddef>
#include <utility>
#include <vector>

#include "nckit/arith.hpp"
#include "nckit/error.hpp"

namespace nckit {

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

/// Determinant by Bareiss fraction-free elimination. Every division is
/// exact, so T may be BigInt or Rational. Rows are pivoted on the nonzero
/// entry of least magnitude in the current column; each swap flips the
/// sign.
template <class T>
T bareiss_determinant(DenseMatrix<T> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw invalid_input("determinant of a non-square matrix");
  if (n == 0) return T(1);
  T previous = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k] == 0) continue;
      if (pivot == n || abs(a[i][k]) < abs(a[pivot][k])) pivot = i;
    }
    if (pivot == n) return T(0);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      negate = !negate;
    }
    const T& p = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const T f = a[i][k];
      auto& row = a[i];
      const auto& prow = a[k];
      if (f == 0) {
        for (std::size_t j = k + 1; j < n; ++j)
          if (row[j] != 0) {
            row[j] *= p;
            row[j] /= previous;
          }
      } else {
        for (std::size_t j = k + 1; j < n; ++j) {
          row[j] *= p;
          row[j] -= f * prow[j];
          row[j] /= previous;
        }
      }
      row[k] = 0;
    }
    previous = p;
  }
  T det = a[n - 1][n - 1];
  return negate ? T(-det) : det;
}

/// Inverse of a unit lower-triangular matrix (such as a zeta matrix in a
/// linear extension), by forward substitution.
inline DenseMatrix<BigInt> unit_lower_inverse(const DenseMatrix<BigInt>& l) {
  const std::size_t n = l.size();
  DenseMatrix<BigInt> inv(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (l[i][i] != 1) throw invalid_input("matrix is not unit lower-triangular");
    for (std::size_t j = i + 1; j < n; ++j)
      if (l[i][j] != 0) throw invalid_input("matrix is not unit lower-triangular");
  }
  for (std::size_t j = 0; j < n; ++j) {
    inv[j][j] = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      BigInt s = 0;
      for (std::size_t m = j; m < i; ++m)
        if (l[i][m] != 0) s += l[i][m] * inv[m][j];
      inv[i][j] = -s;
    }
  }
  return inv;
}

}  // namespace nckit
