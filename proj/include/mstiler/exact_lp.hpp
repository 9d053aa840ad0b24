// Dense exact simplex (phase one only) for small rational feasibility problems.
#pragma once

#include "mstiler/golden.hpp"

#include <optional>
#include <vector>

namespace mstiler {

/// A system of rational linear constraints over free variables:
///   eq_rows[i] . y == eq_rhs[i]
///   ub_rows[j] . y <= ub_rhs[j]
struct LinearSystem {
  size_t num_vars = 0;
  std::vector<std::vector<Rational>> eq_rows;
  std::vector<Rational> eq_rhs;
  std::vector<std::vector<Rational>> ub_rows;
  std::vector<Rational> ub_rhs;
};

/// Returns a feasible point, or nullopt when the system is infeasible.
/// Bland's rule guarantees termination.
inline std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem& sys) {
  const size_t n = sys.num_vars;
  const size_t m_eq = sys.eq_rows.size();
  const size_t m_ub = sys.ub_rows.size();
  const size_t m = m_eq + m_ub;
  // Columns: y+ (n), y- (n), slacks (m_ub), artificials (m), rhs.
  const size_t n_struct = 2 * n + m_ub;
  const size_t n_cols = n_struct + m + 1;
  std::vector<std::vector<Rational>> tab(m + 1, std::vector<Rational>(n_cols, Rational(0)));
  std::vector<size_t> basis(m);

  for (size_t i = 0; i < m; ++i) {
    const bool is_eq = i < m_eq;
    const auto& row = is_eq ? sys.eq_rows[i] : sys.ub_rows[i - m_eq];
    Rational rhs = is_eq ? sys.eq_rhs[i] : sys.ub_rhs[i - m_eq];
    auto& t = tab[i];
    for (size_t j = 0; j < n; ++j) {
      t[j] = row[j];
      t[n + j] = -row[j];
    }
    if (!is_eq) t[2 * n + (i - m_eq)] = 1;
    t[n_cols - 1] = rhs;
    if (sgn(rhs) < 0) {
      for (size_t j = 0; j < n_struct; ++j) t[j] = -t[j];
      t[n_cols - 1] = -rhs;
    }
    t[n_struct + i] = 1;
    basis[i] = n_struct + i;
  }
  // Objective row: minimise the sum of artificials, expressed in non-basic terms.
  auto& obj = tab[m];
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n_cols; ++j)
      if (j < n_struct || j == n_cols - 1) obj[j] -= tab[i][j];

  for (;;) {
    size_t enter = n_cols;
    for (size_t j = 0; j + 1 < n_cols; ++j) {
      if (sgn(obj[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n_cols) break;
    size_t leave = m;
    Rational best_ratio;
    for (size_t i = 0; i < m; ++i) {
      if (sgn(tab[i][enter]) <= 0) continue;
      Rational ratio = tab[i][n_cols - 1] / tab[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase one
    Rational piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(tab[i][enter]) == 0) continue;
      Rational f = tab[i][enter];
      for (size_t j = 0; j < n_cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  if (sgn(tab[m][n_cols - 1]) != 0) return std::nullopt;
  std::vector<Rational> y(n, Rational(0));
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] < n) y[basis[i]] += tab[i][n_cols - 1];
    else if (basis[i] < 2 * n) y[basis[i] - n] -= tab[i][n_cols - 1];
  }
  return y;
}

}  // namespace mstiler
