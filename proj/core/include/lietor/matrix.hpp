#pragma once

#include <optional>
#include <vector>

#include "lietor/cyclotomic.hpp"
#include "lietor/rat.hpp"

namespace lietor {

// Dense matrices over an exact field (Rat or Cyc). Sizes here are small
// (a few hundred at most), so plain Gaussian elimination is fine.
template <class F>
using Vec = std::vector<F>;
template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
Mat<F> mat_zero(size_t r, size_t c) {
  return Mat<F>(r, Vec<F>(c, F(0)));
}

template <class F>
Mat<F> mat_identity(size_t n) {
  Mat<F> m = mat_zero<F>(n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
  size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  Mat<F> out = mat_zero<F>(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (is_zero(a[i][t])) continue;
      for (size_t j = 0; j < c; ++j) {
        if (is_zero(b[t][j])) continue;
        out[i][j] += a[i][t] * b[t][j];
      }
    }
  return out;
}

template <class F>
Vec<F> mat_vec(const Mat<F>& a, const Vec<F>& v) {
  Vec<F> out(a.size(), F(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) {
      if (is_zero(a[i][j]) || is_zero(v[j])) continue;
      out[i] += a[i][j] * v[j];
    }
  return out;
}

template <class F>
Vec<F> vec_add(Vec<F> a, const Vec<F>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class F>
Vec<F> vec_scale(Vec<F> a, const F& s) {
  for (auto& x : a) x *= s;
  return a;
}

template <class F>
bool vec_is_zero(const Vec<F>& a) {
  for (const auto& x : a)
    if (!is_zero(x)) return false;
  return true;
}

template <class F>
bool mat_equal(const Mat<F>& a, const Mat<F>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  }
  return true;
}

// In-place reduced row echelon form; returns pivot column indices.
template <class F>
std::vector<size_t> rref(Mat<F>& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = rows;
    for (size_t i = row; i < rows; ++i) {
      if (!is_zero(m[i][col])) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    std::swap(m[row], m[sel]);
    F inv = F(1) / m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || is_zero(m[i][col])) continue;
      F f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
size_t mat_rank(Mat<F> m) {
  return rref(m).size();
}

// Basis of the right nullspace of m (list of column vectors).
template <class F>
std::vector<Vec<F>> nullspace(Mat<F> m) {
  size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<size_t> piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<Vec<F>> out;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_piv[free_col]) continue;
    Vec<F> v(cols, F(0));
    v[free_col] = F(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][free_col];
    out.push_back(std::move(v));
  }
  return out;
}

// Solves a x = b; returns one solution or nullopt if inconsistent.
template <class F>
std::optional<Vec<F>> solve(Mat<F> a, const Vec<F>& b) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<size_t> piv = rref(a);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  Vec<F> x(cols, F(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
  return x;
}

template <class F>
std::optional<Mat<F>> mat_inverse(const Mat<F>& a) {
  size_t n = a.size();
  Mat<F> aug = a;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? F(1) : F(0));
  }
  std::vector<size_t> piv = rref(aug);
  // invertible iff the pivots are exactly the first n columns
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat<F> inv = mat_zero<F>(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

// Expresses v in the span of basis vectors (columns); nullopt if outside.
template <class F>
std::optional<Vec<F>> coords_in_span(const std::vector<Vec<F>>& basis, const Vec<F>& v) {
  if (basis.empty()) return vec_is_zero(v) ? std::optional<Vec<F>>(Vec<F>{}) : std::nullopt;
  size_t dim = basis[0].size();
  Mat<F> a = mat_zero<F>(dim, basis.size());
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < dim; ++i) a[i][j] = basis[j][i];
  return solve(a, v);
}

// Grows an independent set: returns true (and appends) if v is new.
template <class F>
struct SpanBuilder {
  Mat<F> rows;  // rref'd snapshot
  std::vector<size_t> pivots;

  bool add(Vec<F> v) {
    // reduce v by existing rows
    for (size_t r = 0; r < rows.size(); ++r) {
      const F& lead = v[pivots[r]];
      if (is_zero(lead)) continue;
      F f = lead;
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    size_t p = v.size();
    for (size_t j = 0; j < v.size(); ++j) {
      if (!is_zero(v[j])) {
        p = j;
        break;
      }
    }
    if (p == v.size()) return false;
    F inv = F(1) / v[p];
    for (auto& x : v) x *= inv;
    // back-substitute into existing rows
    for (size_t r = 0; r < rows.size(); ++r) {
      F f = rows[r][p];
      if (is_zero(f)) continue;
      for (size_t j = 0; j < v.size(); ++j) rows[r][j] -= f * v[j];
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
  size_t dim() const { return rows.size(); }
};

}  // namespace lietor
