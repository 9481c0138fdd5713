#pragma once

#include <vector>

#include "sfs/rational.hpp"

namespace sfs {

// Negative continued fractions:
//   [m_1, ..., m_k] = m_1 - 1/(m_2 - 1/(... - 1/m_k))
// Canonical expansions have every m_i <= -2; they exist and are unique for
// every rational x <= -2 (or non-integer x < -1). The inverted form
// [0, m_1, ..., m_k] = -1/[m_1, ..., m_k] encodes a rational in (0, 1).

constexpr int kContFracCap = 100000;

// Right-to-left evaluation. Empty input is rejected; a zero intermediate
// denominator means the term list is not a valid expansion.
inline Rational nc_eval(const std::vector<long long>& terms) {
  if (terms.empty()) throw precondition_error("empty continued fraction");
  Rational val(terms.back());
  for (size_t i = terms.size() - 1; i-- > 0;) {
    if (val.is_zero())
      throw precondition_error("zero denominator while evaluating continued fraction");
    val = Rational(terms[i]) - val.reciprocal();
  }
  return val;
}

// Canonical expansion with all terms <= -2. Domain: integers <= -2 and
// non-integer rationals < -1.
inline std::vector<long long> nc_expand(const Rational& x0) {
  if (x0.is_integer()) {
    if (x0 > Rational(-2))
      throw precondition_error("no canonical expansion for integer " + x0.str());
    return {Rational::to_ll(x0.num(), "continued fraction term")};
  }
  if (x0 >= Rational(-1))
    throw precondition_error("no canonical expansion for " + x0.str() + " >= -1");
  std::vector<long long> terms;
  Rational x = x0;
  for (int guard = 0; guard < kContFracCap; ++guard) {
    if (x.is_integer()) {
      terms.push_back(Rational::to_ll(x.num(), "continued fraction term"));
      return terms;
    }
    Int m = x.floor();
    terms.push_back(Rational::to_ll(m, "continued fraction term"));
    // x = m - 1/y with y = 1/(m - x); m - x is in (-1, 0), so y < -1 again.
    x = (Rational(m) - x).reciprocal();
  }
  throw internal_error("continued fraction expansion did not terminate");
}

// Expansion of r in (0, 1) as [0, m_1, ..., m_k] = -1/[m_1, ..., m_k].
inline std::vector<long long> nc_expand_inverted(const Rational& r) {
  if (!(Rational(0) < r && r < Rational(1)))
    throw precondition_error("inverted expansion needs r in (0,1), got " + r.str());
  std::vector<long long> terms{0};
  for (long long m : nc_expand(-r.reciprocal())) terms.push_back(m);
  return terms;
}

// Leg coefficients of r in (0,1): the terms after the leading 0.
inline std::vector<long long> leg_of_coefficient(const Rational& r) {
  auto t = nc_expand_inverted(r);
  return std::vector<long long>(t.begin() + 1, t.end());
}

// Number of trailing -2 entries among the first `len` terms.
inline long long trailing_twos(const std::vector<long long>& terms, size_t len) {
  long long c = 0;
  for (size_t i = len; i-- > 0;) {
    if (terms[i] != -2) break;
    ++c;
  }
  return c;
}

}  // namespace sfs
