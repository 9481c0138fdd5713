#pragma once

#include <string>

#include "sfs/rational.hpp"

namespace sfs {

// Farey / Stern-Brocot machinery on [0, 1].

struct FareyPair {
  Rational lo, hi;
};

// Mediant (a+b)/(c+d) of a/c and b/d. For Farey neighbours the result is
// automatically in lowest terms, so reduction does not change num/den.
inline Rational mediant(const Rational& a, const Rational& b) {
  return Rational(a.num() + b.num(), a.den() + b.den());
}

// bc - ad = 1 for lo = a/c, hi = b/d.
inline bool farey_neighbours(const Rational& lo, const Rational& hi) {
  return hi.num() * lo.den() - lo.num() * hi.den() == 1;
}

struct FareySearchResult {
  FareyPair pair;      // the Farey neighbours bracketing the open interval
  Rational mid;        // their mediant, the first one inside (r1, 1 - r2)
  long long q;         // denominator of mid
  long long p1;        // numerator of mid
};

// Stern-Brocot descent from (0/1, 1/1): returns the first mediant lying in
// the open interval (r1, 1 - r2). Requires 1/2 <= r1 < 1, 0 < r2 <= r1 and
// r1 + r2 < 1, so the interval sits inside (1/2, 1) and has a unique
// smallest-denominator element.
inline FareySearchResult farey_mediant_search(const Rational& r1, const Rational& r2) {
  if (!(Rational(0) < r2 && r2 <= r1 && r1 < Rational(1)))
    throw precondition_error("farey search needs 0 < r2 <= r1 < 1");
  if (r1 + r2 >= Rational(1))
    throw precondition_error("farey search needs r1 + r2 < 1");
  if (r1 < Rational(1, 2))
    throw precondition_error("farey search needs r1 >= 1/2 (use the q = 2 case instead)");
  Rational lo(0), hi(1);
  const Rational upper = Rational(1) - r2;
  for (int guard = 0; guard < 1000000; ++guard) {
    check_internal(farey_neighbours(lo, hi), "farey descent lost the neighbour invariant");
    Rational m = mediant(lo, hi);
    if (r1 < m && m < upper)
      return {{lo, hi}, m, Rational::to_ll(m.den(), "farey q"),
              Rational::to_ll(m.num(), "farey p1")};
    if (m <= r1)
      lo = m;
    else
      hi = m;
  }
  throw internal_error("farey descent did not terminate");
}

}  // namespace sfs
