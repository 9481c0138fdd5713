#include <doctest.h>

#include <numeric>

#include "sfs/cont_frac.hpp"
#include "sfs/farey.hpp"
#include "sfs/rational.hpp"

using namespace sfs;

TEST_CASE("rational arithmetic and normal form") {
  Rational a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
  CHECK((Rational(1, 2) - Rational(1, 3)).str() == "1/6");
  CHECK((Rational(2, 3) * Rational(3, 4)).str() == "1/2");
  CHECK((Rational(2, 3) / Rational(4, 3)).str() == "1/2");
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(7).is_integer());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-3, 7).sign() == -1);
  CHECK(Rational(5, 7).reciprocal() == Rational(7, 5));
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK_THROWS_AS(Rational(1, 0), precondition_error);
}

TEST_CASE("rational floor, ceil and frac") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(6, 2).floor() == 3);
  CHECK(Rational(6, 2).ceil() == 3);
  CHECK(Rational(-1, 6).frac() == Rational(5, 6));
  CHECK(Rational(13, 6).frac() == Rational(1, 6));
}

TEST_CASE("rational text round trip") {
  for (const char* text : {"0", "5", "-3", "1/2", "-7/4", "22/7"}) {
    Rational r = Rational::parse(text);
    CHECK(r.str() == text);
  }
  CHECK(Rational::parse(" -1 / 2 ") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("1.5"), parse_error);
  CHECK_THROWS_AS(Rational::parse(""), parse_error);
  CHECK_THROWS_AS(Rational::parse("a/b"), parse_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), precondition_error);
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) <= Rational(1, 2));
  CHECK(Rational(5, 7) > Rational(2, 3));
}

TEST_CASE("negative continued fractions expand and evaluate") {
  CHECK((nc_expand(Rational(-7, 2)) == std::vector<long long>{-4, -2}));
  CHECK((nc_expand(Rational(-2)) == std::vector<long long>{-2}));
  CHECK((nc_eval({-4, -2}) == Rational(-7, 2)));
  CHECK((nc_eval({-2, -2, -2}) == Rational(-4, 3)));

  // Round trip over every reduced fraction with small denominator.
  for (long long den = 2; den <= 12; ++den)
    for (long long num = 1; num < den; ++num) {
      if (std::gcd(num, den) != 1) continue;
      Rational r(num, den);
      auto terms = nc_expand(-r.reciprocal());
      CHECK(nc_eval(terms) == -r.reciprocal());
      for (long long m : terms) CHECK(m <= -2);
      CHECK(leg_of_coefficient(r) == terms);
    }
}

TEST_CASE("legs of the standard coefficients") {
  auto leg = [](long long n, long long d) { return leg_of_coefficient(Rational(n, d)); };
  CHECK((leg(1, 2) == std::vector<long long>{-2}));
  CHECK((leg(1, 3) == std::vector<long long>{-3}));
  CHECK((leg(2, 3) == std::vector<long long>{-2, -2}));
  CHECK((leg(1, 7) == std::vector<long long>{-7}));
  CHECK((leg(2, 7) == std::vector<long long>{-4, -2}));
  CHECK((leg(4, 7) == std::vector<long long>{-2, -4}));
  CHECK((leg(2, 5) == std::vector<long long>{-3, -2}));
  CHECK((leg(3, 8) == std::vector<long long>{-3, -3}));
  CHECK((leg(5, 8) == std::vector<long long>{-2, -3, -2}));
  CHECK((leg(4, 5) == std::vector<long long>{-2, -2, -2, -2}));
}

TEST_CASE("trailing twos") {
  std::vector<long long> t{-2, -3, -2, -2};
  CHECK(trailing_twos(t, 4) == 2);
  CHECK(trailing_twos(t, 2) == 0);
  CHECK(trailing_twos(t, 1) == 1);
  CHECK(trailing_twos(t, 0) == 0);
}

TEST_CASE("farey mediants and neighbours") {
  CHECK(mediant(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
  CHECK(farey_neighbours(Rational(1, 3), Rational(1, 2)));
  CHECK(farey_neighbours(Rational(0), Rational(1)));
  CHECK(!farey_neighbours(Rational(1, 4), Rational(1, 2)));
}

TEST_CASE("stern-brocot search finds the smallest denominator in the gap") {
  FareySearchResult r = farey_mediant_search(Rational(2, 3), Rational(1, 5));
  CHECK(r.mid == Rational(3, 4));
  CHECK(r.q == 4);
  CHECK(r.p1 == 3);

  r = farey_mediant_search(Rational(1, 2), Rational(1, 3));
  // Interval (1/2, 2/3): the unique smallest-denominator element is 3/5.
  CHECK(r.mid == Rational(3, 5));
  CHECK(r.q == 5);

  CHECK_THROWS_AS(farey_mediant_search(Rational(1, 3), Rational(1, 5)),
                  precondition_error);
  CHECK_THROWS_AS(farey_mediant_search(Rational(1, 2), Rational(1, 2)),
                  precondition_error);
}

TEST_CASE("ll conversion guards overflow") {
  CHECK(Rational::to_ll(Int(42), "x") == 42);
  Int big(1);
  for (int i = 0; i < 70; ++i) big *= 2;
  CHECK_THROWS_AS(Rational::to_ll(big, "x"), internal_error);
  CHECK(to_int(1234567890123LL) == Int("1234567890123"));
}
