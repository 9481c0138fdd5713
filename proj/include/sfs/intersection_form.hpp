#pragma once

#include <vector>

#include "sfs/star_graph.hpp"

namespace sfs {

// Intersection form of the plumbing: Q[v][v] = framing, Q[u][v] = 1 for
// edges of the tree, 0 otherwise. Carries the exact inverse, determinant
// and adjacency, which every lattice computation downstream leans on.
struct IntersectionForm {
  int n = 0;
  std::vector<std::vector<long long>> q;
  std::vector<std::vector<Rational>> qinv;
  Int det;
  std::vector<long long> diag;
  std::vector<std::vector<int>> adj;

  // Row `v` of Q^{-1} as exact rationals.
  const std::vector<Rational>& inv_row(int v) const { return qinv[v]; }
};

namespace detail {

// Gauss-Jordan over exact rationals; returns determinant and writes the
// inverse. Throws internal_error on a singular matrix (callers only pass
// forms whose determinant was already checked, or want the error).
inline Int invert_exact(const std::vector<std::vector<long long>>& a,
                        std::vector<std::vector<Rational>>& inv) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    m[i][n + i] = Rational(1);
  }
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw precondition_error("singular intersection form");
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv_p = m[col][col].reciprocal();
    for (int j = 0; j < 2 * n; ++j) m[col][j] *= inv_p;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (int j = col; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  inv.assign(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  check_internal(det.is_integer(), "integer matrix must have integer determinant");
  return det.num();
}

// Leading principal minors d_1..d_n via symmetric fraction-free elimination.
// A zero pivot stops the list early (the matrix is then not definite).
inline std::vector<Rational> leading_pivots(const std::vector<std::vector<long long>>& a) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
  std::vector<Rational> pivots;
  for (int k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) break;
    pivots.push_back(m[k][k]);
    Rational inv_p = m[k][k].reciprocal();
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      Rational f = m[i][k] * inv_p;
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return pivots;
}

}  // namespace detail

// Builds the form from an arbitrary symmetric integer matrix. No tree
// structure is assumed; adjacency lists collect nonzero off-diagonals.
inline IntersectionForm form_from_matrix(std::vector<std::vector<long long>> q) {
  IntersectionForm f;
  f.n = static_cast<int>(q.size());
  for (const auto& row : q)
    if (static_cast<int>(row.size()) != f.n)
      throw precondition_error("intersection form must be square");
  for (int i = 0; i < f.n; ++i)
    for (int j = i + 1; j < f.n; ++j)
      if (q[i][j] != q[j][i]) throw precondition_error("intersection form must be symmetric");
  f.q = std::move(q);
  f.diag.resize(f.n);
  f.adj.assign(f.n, {});
  for (int i = 0; i < f.n; ++i) {
    f.diag[i] = f.q[i][i];
    for (int j = 0; j < f.n; ++j)
      if (j != i && f.q[i][j] != 0) f.adj[i].push_back(j);
  }
  f.det = detail::invert_exact(f.q, f.qinv);
  for (int i = 0; i < f.n; ++i)
    for (int j = i + 1; j < f.n; ++j)
      check_internal(f.qinv[i][j] == f.qinv[j][i], "inverse of symmetric matrix is symmetric");
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j) {
      Rational acc(0);
      for (int k = 0; k < f.n; ++k) acc += Rational(f.q[i][k]) * f.qinv[k][j];
      check_internal(acc == Rational(i == j ? 1 : 0), "Q * Qinv must be the identity exactly");
    }
  return f;
}

inline IntersectionForm intersection_form(const StarGraph& g) {
  validate_graph(g);
  int n = g.size();
  std::vector<std::vector<long long>> q(n, std::vector<long long>(n, 0));
  q[0][0] = g.central;
  for (size_t leg = 0; leg < g.legs.size(); ++leg) {
    for (size_t pos = 0; pos < g.legs[leg].size(); ++pos) {
      int v = g.leg_vertex(leg, pos);
      q[v][v] = g.legs[leg][pos];
      int prev = pos == 0 ? 0 : g.leg_vertex(leg, pos - 1);
      q[v][prev] = q[prev][v] = 1;
    }
  }
  IntersectionForm f = form_from_matrix(std::move(q));
  // 1/e(M) is the central entry of the inverse; a standing cross-check
  // between the lattice and the fractional data.
  Rational e = graph_euler(g);
  if (!e.is_zero())
    check_internal(f.qinv[0][0] == e.reciprocal(),
                   "central entry of Q^{-1} must equal 1/e");
  return f;
}

struct NdReport {
  bool negative_definite = false;
  Rational euler;                 // e(M) of the graph
  bool euler_negative = false;
  bool sylvester = false;         // leading minors alternate: (-1)^k d_k > 0
  int first_failing_minor = 0;    // 1-based; 0 when none fails
};

// Checks negative definiteness two ways: Sylvester's criterion on the
// matrix and e(M) < 0 on the fractional data. For star-shaped graphs with
// all leg framings <= -2 and central <= -1 these must agree.
inline NdReport is_negative_definite(const StarGraph& g) {
  NdReport rep;
  rep.euler = graph_euler(g);
  rep.euler_negative = rep.euler.sign() < 0;
  int n = g.size();
  std::vector<std::vector<long long>> q(n, std::vector<long long>(n, 0));
  q[0][0] = g.central;
  for (size_t leg = 0; leg < g.legs.size(); ++leg)
    for (size_t pos = 0; pos < g.legs[leg].size(); ++pos) {
      int v = g.leg_vertex(leg, pos);
      q[v][v] = g.legs[leg][pos];
      int prev = pos == 0 ? 0 : g.leg_vertex(leg, pos - 1);
      q[v][prev] = q[prev][v] = 1;
    }
  auto pivots = detail::leading_pivots(q);
  rep.sylvester = pivots.size() == static_cast<size_t>(n);
  for (size_t k = 0; k < pivots.size(); ++k) {
    // Pivot k equals d_{k+1}/d_k, so alternation of minors means every
    // pivot is negative.
    if (pivots[k].sign() >= 0) {
      rep.sylvester = false;
      rep.first_failing_minor = static_cast<int>(k) + 1;
      break;
    }
  }
  if (!rep.sylvester && rep.first_failing_minor == 0)
    rep.first_failing_minor = static_cast<int>(pivots.size()) + 1;  // zero minor
  if (rep.sylvester != rep.euler_negative)
    throw internal_error("Sylvester and Euler-number tests disagree on " + graph_to_text(g));
  rep.negative_definite = rep.sylvester;
  return rep;
}

// Generic definiteness test for an arbitrary symmetric integer matrix.
inline bool matrix_negative_definite(const std::vector<std::vector<long long>>& q) {
  auto pivots = detail::leading_pivots(q);
  if (pivots.size() != q.size()) return false;
  for (const auto& p : pivots)
    if (p.sign() >= 0) return false;
  return true;
}

}  // namespace sfs
