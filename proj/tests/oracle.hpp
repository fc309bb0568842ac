#pragma once

// Test-only reference routes. Nothing here calls the library's product,
// involution or inversion kernels; elements are mapped to matrices of the
// left regular representation and handled with plain linear algebra mod p.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "gabra/algebra.hpp"

namespace gabra::oracle {

using Matrix = std::vector<std::vector<std::uint32_t>>;

/// rho(x)[g*h][h] = x_g; rho(x) e_h = x * h.
inline Matrix regular_matrix(const AlgebraElement& x) {
  const auto& group = x.context()->group();
  const std::size_t n = group.order();
  Matrix m(n, std::vector<std::uint32_t>(n, 0));
  for (ElementIndex g = 0; g < n; ++g) {
    for (ElementIndex h = 0; h < n; ++h) m[group.cayley()[g][h]][h] = x[g];
  }
  return m;
}

/// Column of the identity recovers the coefficients.
inline std::vector<unsigned> from_matrix(const Matrix& m) {
  std::vector<unsigned> c(m.size());
  for (std::size_t g = 0; g < m.size(); ++g) c[g] = m[g][0];
  return c;
}

inline Matrix matmul(const Matrix& a, const Matrix& b, unsigned p) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
    }
  }
  return c;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.size(), std::vector<std::uint32_t>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

inline std::uint32_t inverse_mod(std::uint32_t a, unsigned p) {
  std::uint32_t r = 1;
  for (unsigned e = p - 2; e; e >>= 1, a = a * a % p) {
    if (e & 1) r = r * a % p;
  }
  return r;
}

/// Gauss-Jordan inverse mod p; nullopt when singular.
inline std::optional<Matrix> invert(Matrix a, unsigned p) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const std::uint32_t scale = inverse_mod(a[col][col], p);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = a[col][j] * scale % p;
      inv[col][j] = inv[col][j] * scale % p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const std::uint32_t f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] = (a[row][j] + (p - f) * a[col][j]) % p;
        inv[row][j] = (inv[row][j] + (p - f) * inv[col][j]) % p;
      }
    }
  }
  return inv;
}

inline AlgebraElement product(const AlgebraElement& x, const AlgebraElement& y) {
  const unsigned p = x.context()->p();
  return AlgebraElement(x.context(), from_matrix(matmul(regular_matrix(x), regular_matrix(y), p)));
}

/// Exhaustive group axiom check straight off the table.
inline bool satisfies_group_axioms(const std::vector<std::vector<ElementIndex>>& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (t[0][i] != i || t[i][0] != i) return false;
    std::set<ElementIndex> row(t[i].begin(), t[i].end()), column;
    for (std::size_t j = 0; j < n; ++j) column.insert(t[j][i]);
    if (row.size() != n || column.size() != n) return false;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (t[t[i][j]][k] != t[i][t[j][k]]) return false;
      }
    }
  }
  return true;
}

inline std::size_t element_order(const FiniteGroup& g, ElementIndex x) {
  std::size_t k = 1;
  for (ElementIndex y = x; y != 0; y = g.cayley()[y][x]) ++k;
  return k;
}

}  // namespace gabra::oracle
