#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sfs/rational.hpp"

namespace sfs {

// Normalised Seifert invariants (e0; r1, ..., rn) of a Seifert fibred
// rational homology sphere over S^2. Coefficients are kept sorted in
// descending order; in the standard normal form each ri lies in (0, 1).
// Surgery duals of torus links are allowed to carry negative coefficients;
// those are tagged so that downstream operations can refuse them.
struct SeifertData {
  long long e0 = -1;
  std::vector<Rational> coeffs;   // sorted descending
  bool from_torus_link = false;   // set when negative coefficients are allowed

  SeifertData() = default;
  SeifertData(long long e0_in, std::vector<Rational> rs, bool allow_negative = false)
      : e0(e0_in), coeffs(std::move(rs)), from_torus_link(allow_negative) {
    for (const auto& r : coeffs) {
      if (allow_negative) {
        if (r.is_zero() || r >= Rational(1))
          throw precondition_error("coefficient " + r.str() + " outside (-inf, 1) \\ {0}");
      } else {
        if (!(Rational(0) < r && r < Rational(1)))
          throw precondition_error("coefficient " + r.str() + " outside (0, 1)");
      }
    }
    std::sort(coeffs.begin(), coeffs.end(),
              [](const Rational& a, const Rational& b) { return b < a; });
  }

  size_t n() const { return coeffs.size(); }
};

// e(M) = e0 + sum ri. Negative definiteness of the standard plumbing is
// equivalent to e(M) < 0.
inline Rational euler_number(const SeifertData& s) {
  Rational e(s.e0);
  for (const auto& r : s.coeffs) e += r;
  return e;
}

inline std::string seifert_to_text(const SeifertData& s) {
  std::ostringstream os;
  os << s.e0 << ";";
  for (size_t i = 0; i < s.coeffs.size(); ++i)
    os << (i ? ", " : " ") << s.coeffs[i].str();
  return os.str();
}

// Parses "e0; r1, r2, ..." (the coefficient list may be empty).
inline SeifertData seifert_from_text(const std::string& text, bool allow_negative = false) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw parse_error("expected 'e0; r1, r2, ...', got '" + text + "'");
  Rational e0 = Rational::parse(text.substr(0, semi));
  if (!e0.is_integer()) throw parse_error("e0 must be an integer, got " + e0.str());
  std::vector<Rational> rs;
  std::string rest = text.substr(semi + 1);
  size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    bool blank = true;
    for (char c : tok)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank)
      rs.push_back(Rational::parse(tok));
    else if (comma != std::string::npos || !rs.empty())
      throw parse_error("empty coefficient in '" + text + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == rest.size()) throw parse_error("trailing comma in '" + text + "'");
  }
  return SeifertData(Rational::to_ll(e0.num(), "e0"), std::move(rs), allow_negative);
}

// Pairwise coprime exponents a_i >= 2 of a Brieskorn link. Kept sorted.
struct BrieskornData {
  std::vector<long long> exponents;

  explicit BrieskornData(std::vector<long long> as) : exponents(std::move(as)) {
    if (exponents.size() < 2)
      throw precondition_error("need at least two exponents");
    std::sort(exponents.begin(), exponents.end());
    for (long long a : exponents)
      if (a < 2) throw precondition_error("exponents must be >= 2");
    for (size_t i = 0; i < exponents.size(); ++i)
      for (size_t j = i + 1; j < exponents.size(); ++j)
        if (std::gcd(exponents[i], exponents[j]) != 1)
          throw precondition_error("exponents must be pairwise coprime");
  }
};

inline BrieskornData brieskorn_from_text(const std::string& text) {
  std::vector<long long> as;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    Rational v = Rational::parse(tok);
    if (!v.is_integer()) throw parse_error("exponent must be an integer, got " + tok);
    as.push_back(Rational::to_ll(v.num(), "exponent"));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return BrieskornData(std::move(as));
}

// Seifert invariants of the Brieskorn sphere Sigma(a_1, ..., a_n):
// with A = prod a_i, pick 0 < b_i < a_i such that b_i * (A / a_i) = -1
// mod a_i; then r_i = b_i / a_i and e0 = -(1 + sum b_i A / a_i) / A,
// which makes e(M) = -1/A.
inline SeifertData brieskorn_to_seifert(const BrieskornData& b) {
  Int A(1);
  for (long long a : b.exponents) A *= static_cast<long>(a);
  std::vector<Rational> rs;
  Int weighted(0);
  for (long long a : b.exponents) {
    Int ai(static_cast<long>(a));
    Int Ai = A / ai;
    Int inv;
    int ok = mpz_invert(inv.get_mpz_t(), Ai.get_mpz_t(), ai.get_mpz_t());
    check_internal(ok != 0, "coprimality guaranteed an inverse mod a_i");
    Int bi = ((-inv) % ai + ai) % ai;
    check_internal(bi > 0 && bi < ai, "b_i must lie strictly between 0 and a_i");
    rs.emplace_back(bi, ai);
    weighted += bi * Ai;
  }
  Int numer = weighted + 1;
  check_internal(numer % A == 0, "e0 formula must produce an integer");
  Int e0 = -(numer / A);
  SeifertData s(Rational::to_ll(e0, "e0"), std::move(rs));
  check_internal(euler_number(s) == Rational(Int(-1), A),
                 "Brieskorn data must have e = -1/(a_1...a_n)");
  return s;
}

}  // namespace sfs
