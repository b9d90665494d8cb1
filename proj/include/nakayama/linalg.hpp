#pragma once

#include <optional>
#include <vector>

#include "numbers.hpp"

namespace nakayama {
namespace linalg {

using Matrix = std::vector<std::vector<Rat>>;

// Row-reduces in place; returns the rank.
inline int rank(Matrix m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat factor = m[i][c] / m[r][c];
      for (size_t k = c; k < cols; ++k) m[i][k] -= factor * m[r][k];
    }
    ++r;
  }
  return static_cast<int>(r);
}

// Unique solution of a (possibly overdetermined) consistent system, or
// nullopt when the solution is not unique or the system is inconsistent.
inline std::optional<std::vector<Rat>> solve_unique(Matrix a,
                                                    std::vector<Rat> b) {
  size_t rows = a.size();
  if (rows == 0) return std::vector<Rat>{};
  size_t cols = a[0].size();
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  size_t r = 0;
  std::vector<size_t> pivot_col;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat factor = a[i][c] / a[r][c];
      for (size_t k = c; k <= cols; ++k) a[i][k] -= factor * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;  // inconsistent
  if (r < cols) return std::nullopt;           // underdetermined
  std::vector<Rat> x(cols, Rat(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][cols] / a[i][pivot_col[i]];
  return x;
}

// Dimension of the affine hull of a point set.
inline int affine_rank(const std::vector<std::vector<Rat>>& pts) {
  if (pts.size() <= 1) return pts.empty() ? -1 : 0;
  Matrix diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rat> d(pts[i].size());
    for (size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

// Phase-1 simplex with Bland's rule: is p a convex combination of pts?
// Exact rational arithmetic throughout.
inline bool in_convex_hull(const std::vector<Rat>& p,
                           const std::vector<std::vector<Rat>>& pts) {
  if (pts.empty()) return false;
  size_t d = p.size();
  size_t rows = d + 1;           // coordinates plus the convexity row
  size_t nvar = pts.size();
  size_t total = nvar + rows;    // columns: lambdas then artificials

  // tableau rows: [A | I | b] with b >= 0 after sign normalization
  std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(total + 1, Rat(0)));
  for (size_t r = 0; r < rows; ++r) {
    Rat rhs = (r < d) ? p[r] : Rat(1);
    for (size_t c = 0; c < nvar; ++c)
      t[r][c] = (r < d) ? pts[c][r] : Rat(1);
    bool flip = rhs < 0;
    if (flip) {
      rhs = -rhs;
      for (size_t c = 0; c < nvar; ++c) t[r][c] = -t[r][c];
    }
    t[r][nvar + r] = 1;
    t[r][total] = rhs;
  }

  std::vector<size_t> basis(rows);
  for (size_t r = 0; r < rows; ++r) basis[r] = nvar + r;

  // objective: minimize sum of artificials; reduced costs for the
  // artificial basis are column sums over the tableau
  std::vector<Rat> obj(total + 1, Rat(0));
  for (size_t c = 0; c <= total; ++c)
    for (size_t r = 0; r < rows; ++r) obj[c] += t[r][c];

  while (true) {
    size_t enter = total;
    for (size_t c = 0; c < nvar; ++c) {  // Bland: first improving column
      if (obj[c] > 0) {
        enter = c;
        break;
      }
    }
    if (enter == total) break;
    size_t leave = rows;
    Rat best = 0;
    for (size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rat ratio = t[r][total] / t[r][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded cannot happen here
    Rat piv = t[leave][enter];
    for (size_t c = 0; c <= total; ++c) t[leave][c] /= piv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rat f = t[r][enter];
      for (size_t c = 0; c <= total; ++c) t[r][c] -= f * t[leave][c];
    }
    Rat f = obj[enter];
    for (size_t c = 0; c <= total; ++c) obj[c] -= f * t[leave][c];
    basis[leave] = enter;
  }
  return obj[total] == 0;
}

}  // namespace linalg
}  // namespace nakayama
