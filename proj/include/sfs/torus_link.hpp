#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sfs/error.hpp"
#include "sfs/intersection_form.hpp"
#include "sfs/rational.hpp"
#include "sfs/seifert_data.hpp"

namespace sfs {

namespace detail {

// Exact integer determinant by fraction-free elimination (Bareiss), with
// row swaps. Returns 0 for singular input.
inline Int int_det(std::vector<std::vector<Int>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (a[r][k] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Int(0);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int numer = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        check_internal(numer % prev == 0, "fraction-free elimination divides exactly");
        a[i][j] = numer / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace detail

// Result of converting surgery on k parallel copies of a torus knot
// T_{p,q} or T_{p,-q} into Seifert invariants. The surgery matrix is the
// component framings on the diagonal and the pairwise linking number
// (+pq or -pq) everywhere else; stripping the linking part leaves a
// diagonal matrix D whose entries become one coefficient -1/D_ii each,
// on top of the two coefficients of the fibre presentation of the knot.
struct TorusLinkResult {
  SeifertData data;              // e0 = -1; coefficients may be negative
  std::vector<Int> d_diag;       // diagonal of D
  Int det_lambda;
  Int det_d;
  Rational euler;                // e(M), always negative on success
};

inline TorusLinkResult torus_link_to_seifert(long long p, long long q, int sign,
                                             const std::vector<std::vector<long long>>& lambda) {
  if (sign != 1 && sign != -1) throw precondition_error("sign must be +1 or -1");
  if (!(1 <= p && p <= q)) throw precondition_error("need 1 <= p <= q");
  if (std::gcd(p, q) != 1) throw precondition_error("p and q must be coprime");
  int k = static_cast<int>(lambda.size());
  if (k < 1) throw precondition_error("need at least one link component");
  for (const auto& row : lambda)
    if (static_cast<int>(row.size()) != k)
      throw precondition_error("surgery matrix must be square");
  Int pq = to_int(p) * to_int(q);
  Int off = sign > 0 ? pq : -pq;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (to_int(lambda[i][j]) != off)
        throw precondition_error("rejected: linking number lambda[" + std::to_string(i + 1) +
                                 "][" + std::to_string(j + 1) + "] = " +
                                 std::to_string(lambda[i][j]) + " must equal " + off.get_str());
    }
  if (p == 1 && sign < 0)
    throw precondition_error("p = 1 with negative q has no fibre coefficient pair; mirror the link");

  std::vector<std::vector<Int>> lam(k, std::vector<Int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) lam[i][j] = to_int(lambda[i][j]);
  Int det_lambda = detail::int_det(lam);

  if (sign > 0) {
    // Hypothesis: the surgery matrix itself is negative definite.
    std::vector<Rational> pivots = detail::leading_pivots(lambda);
    Rational minor(1);
    for (size_t m = 0; m < pivots.size(); ++m) {
      minor *= pivots[m];
      bool ok = (m % 2 == 0) ? minor < Rational(0) : minor > Rational(0);
      if (!ok)
        throw precondition_error("rejected: leading minor " + std::to_string(m + 1) +
                                 " of lambda = " + minor.str() + " has the wrong sign");
    }
    if (static_cast<int>(pivots.size()) < k)
      throw precondition_error("rejected: leading minor " +
                               std::to_string(pivots.size() + 1) + " of lambda vanishes");
  } else {
    for (int i = 0; i < k; ++i)
      if (!(to_int(lambda[i][i]) > -pq))
        throw precondition_error("rejected: framing lambda[" + std::to_string(i + 1) + "][" +
                                 std::to_string(i + 1) + "] = " + std::to_string(lambda[i][i]) +
                                 " must exceed -pq = " + Int(-pq).get_str());
    if (!(det_lambda < 0))
      throw precondition_error("rejected: det lambda = " + det_lambda.get_str() +
                               " must be negative");
  }

  TorusLinkResult res;
  res.det_lambda = det_lambda;
  res.det_d = Int(1);
  std::vector<Rational> coeffs;
  Rational sum_r(0);
  for (int i = 0; i < k; ++i) {
    Int d = to_int(lambda[i][i]) - off;
    check_internal(d != 0, "cable framing separates from the fibre");
    res.d_diag.push_back(d);
    res.det_d *= d;
    Rational r = Rational(Int(-1), d);
    sum_r += r;
    coeffs.push_back(r);
  }

  // Fibre presentation of the torus knot: for p >= 2 these are the two
  // coefficients of the Seifert fibration of S^3 with T_{p,q} as a generic
  // fibre; for p = 1 the unknot contributes one coefficient (or none when
  // q = 1). Negative q replaces each coefficient r by 1 - r.
  if (p >= 2) {
    SeifertData fibre = brieskorn_to_seifert(BrieskornData({p, q}));
    check_internal(fibre.e0 == -1, "fibre presentation has e0 = -1");
    for (const Rational& r : fibre.coeffs)
      coeffs.push_back(sign > 0 ? r : Rational(1) - r);
  } else if (q >= 2) {
    coeffs.push_back(Rational(q - 1, q));
  }

  res.data = SeifertData(-1, std::move(coeffs), /*allow_negative=*/sign < 0);
  res.euler = euler_number(res.data);

  // det(lambda) = det(D) * (1 -+ pq * sum of the component coefficients),
  // exactly; and the resulting Euler number is negative whenever the
  // hypothesis above held.
  Rational rhs = Rational(res.det_d) * (Rational(1) - Rational(off) * sum_r);
  check_internal(Rational(det_lambda) == rhs, "determinant identity for the surgery matrix");
  check_internal(res.euler < Rational(0), "resulting Euler number is negative");
  return res;
}

}  // namespace sfs
