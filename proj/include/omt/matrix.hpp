// Small dense exact matrices and sign-of-determinant.
//
// det_sign runs fraction-free (Bareiss) elimination; over a field every
// division is exact, intermediate entries stay small, and only the sign of
// the final pivot is needed. Works for Rational and QuadExt alike.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "omt/quadext.hpp"
#include "omt/rational.hpp"
#include "omt/sign.hpp"

namespace omt {

template <typename F>
using Matrix = std::vector<std::vector<F>>;

template <typename F>
Sign det_sign(Matrix<F> m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_sign: matrix not square");
  if (n == 0) return Sign::Plus;  // empty determinant is 1

  Sign parity = Sign::Plus;
  F prev = F(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == F(0)) ++pivot;
    if (pivot == n) return Sign::Zero;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      parity = -parity;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = F(0);
    }
    prev = m[k][k];
  }
  return parity * sign_of(m[n - 1][n - 1]);
}

// Gauss-Jordan inverse; nullopt when singular.
template <typename F>
std::optional<Matrix<F>> inverse(Matrix<F> m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("inverse: matrix not square");
  Matrix<F> inv(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = F(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == F(0)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[k]);
    std::swap(inv[pivot], inv[k]);
    F d = m[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      m[k][j] = m[k][j] / d;
      inv[k][j] = inv[k][j] / d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == F(0)) continue;
      F f = m[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = m[i][j] - f * m[k][j];
        inv[i][j] = inv[i][j] - f * inv[k][j];
      }
    }
  }
  return inv;
}

template <typename F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix<F> out(n, std::vector<F>(m, F(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("multiply: shape mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == F(0)) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  }
  return out;
}

}  // namespace omt
