#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>

#include "sfs/error.hpp"

namespace sfs {

using Int = mpz_class;

// mpz_class has no long long constructor (the overload set is ambiguous);
// route all conversions through here.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

// Exact rational number. Always stored reduced with positive denominator.
// Thin wrapper over mpq_class so the rest of the library can rely on exact
// arithmetic without touching GMP expression templates directly.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(const Int& n) : q_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(long long n) : q_(Int(static_cast<long>(n))) {}  // NOLINT
  Rational(int n) : q_(Int(n)) {}             // NOLINT
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(long long num, long long den) : Rational(to_int(num), to_int(den)) {}

  Int num() const { return Int(q_.get_num()); }
  Int den() const { return Int(q_.get_den()); }

  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return q_ == 0; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const {
    if (o.q_ == 0) throw precondition_error("rational division by zero");
    return Rational(mpq_class(q_ / o.q_));
  }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }
  bool operator<=(const Rational& o) const { return q_ <= o.q_; }
  bool operator>(const Rational& o) const { return q_ > o.q_; }
  bool operator>=(const Rational& o) const { return q_ >= o.q_; }

  Rational reciprocal() const {
    if (q_ == 0) throw precondition_error("reciprocal of zero");
    return Rational(den(), num());
  }

  Rational abs() const { return q_ < 0 ? Rational(mpq_class(-q_)) : *this; }

  Int floor() const {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  Int ceil() const {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  // Fractional part in [0, 1).
  Rational frac() const { return *this - Rational(floor()); }

  // "p/q" for non-integers, "p" for integers.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  // Accepts optional sign, digits, optionally "/digits". No decimals.
  static Rational parse(const std::string& text);

  long long num_ll() const { return to_ll(num(), "numerator"); }
  long long den_ll() const { return to_ll(den(), "denominator"); }

  static long long to_ll(const Int& z, const std::string& what) {
    if (!z.fits_slong_p()) throw internal_error(what + " exceeds 64-bit range: " + z.get_str());
    return static_cast<long long>(z.get_si());
  }

 private:
  explicit Rational(const mpq_class& q) : q_(q) {}
  mpq_class q_;
};

inline Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw parse_error("empty rational literal");
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part, bool sign_ok) {
    if (part.empty()) throw parse_error("bad rational literal: '" + text + "'");
    size_t i = (sign_ok && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw parse_error("bad rational literal: '" + text + "'");
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw parse_error("bad rational literal: '" + text + "'");
  };
  if (slash == std::string::npos) {
    check_int(s, true);
    return Rational(Int(s));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  check_int(p, true);
  check_int(q, true);
  Int den(q);
  if (den == 0) throw precondition_error("zero denominator in '" + text + "'");
  return Rational(Int(p), den);
}

}  // namespace sfs
