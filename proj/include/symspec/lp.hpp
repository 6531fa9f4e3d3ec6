#pragma once

// Exact rational simplex for  max c.x  s.t.  A x <= b, x >= 0  with b >= 0, so
// the slack basis is feasible and one phase suffices. Bland's rule prevents
// cycling on the degenerate rows. The optimum is returned with its dual so the
// caller can certify it without trusting the pivoting.

#include <cstddef>
#include <vector>

#include "symspec/exact.hpp"

namespace symspec {

struct LinearProgram {
  std::vector<std::vector<Rational>> a;  // rows x cols
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpSolution {
  std::vector<Rational> x;
  std::vector<Rational> y;  // dual, one per row
  Rational value;
  std::size_t pivots = 0;
};

inline LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  if (lp.b.size() != m) throw InvalidArgument("lp: row count mismatch");
  for (const auto& row : lp.a)
    if (row.size() != n) throw InvalidArgument("lp: column count mismatch");
  for (const auto& v : lp.b)
    if (v < 0) throw InvalidArgument("lp: right-hand side must be non-negative");

  // Tableau columns: n structural, m slack, then the right-hand side.
  const std::size_t w = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(w, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = lp.a[i][j];
    t[i][n + i] = 1;
    t[i][w - 1] = lp.b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -lp.c[j];  // reduced costs

  LpSolution sol;
  while (true) {
    std::size_t enter = w;
    for (std::size_t j = 0; j + 1 < w; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == w) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][w - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw InvariantViolation("lp: objective is unbounded");
    const Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < w; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    ++sol.pivots;
  }

  sol.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) sol.x[basis[i]] = t[i][w - 1];
  sol.y.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) sol.y[i] = t[m][n + i];
  sol.value = t[m][w - 1];
  return sol;
}

/// Primal feasibility, dual feasibility and equal objectives, all exact.
inline bool certifies_optimum(const LinearProgram& lp, const LpSolution& s) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  if (s.x.size() != n || s.y.size() != m) return false;
  Rational primal = 0;
  Rational dual = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (s.x[j] < 0) return false;
    primal += lp.c[j] * s.x[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (s.y[i] < 0) return false;
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += lp.a[i][j] * s.x[j];
    if (lhs > lp.b[i]) return false;
    dual += lp.b[i] * s.y[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < m; ++i) col += lp.a[i][j] * s.y[i];
    if (col < lp.c[j]) return false;
  }
  return primal == dual && primal == s.value;
}

}  // namespace symspec
