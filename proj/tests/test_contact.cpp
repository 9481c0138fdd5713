#include <doctest.h>

#include <numeric>

#include "sfs/contact.hpp"
#include "sfs/farey.hpp"
#include "sfs/sweep.hpp"

using namespace sfs;

namespace {
SeifertData data(const char* text) { return seifert_from_text(text); }
}  // namespace

TEST_CASE("truncation pairs") {
  EllPair e = ell_pair(Rational(1, 2), Rational(1, 3));
  CHECK(e.ell1 == 1);
  CHECK(e.ell2 == 1);
  CHECK(e.branch == 2);
  CHECK(e.d1 == 2);
  CHECK(e.d2 == 3);

  e = ell_pair(Rational(1, 3), Rational(1, 5));
  CHECK(e.ell1 == 0);
  CHECK(e.ell2 == 0);
  CHECK(e.branch == 1);
  CHECK(e.d1 == 1);
  CHECK(e.d2 == 1);

  e = ell_pair(Rational(2, 3), Rational(1, 5));
  CHECK(e.ell1 == 2);
  CHECK(e.ell2 == 0);
  CHECK(e.branch == 1);
  CHECK(e.d1 == 3);
  CHECK(e.d2 == 1);

  e = ell_pair(Rational(4, 7), Rational(3, 8));
  CHECK(e.ell1 == 1);
  CHECK(e.ell2 == 1);
  CHECK(e.branch == 2);
  CHECK(e.d1 == 2);
  CHECK(e.d2 == 3);

  e = ell_pair(Rational(1, 2), Rational(2, 7));
  CHECK(e.ell1 == 1);
  CHECK(e.ell2 == 0);
  CHECK(e.d1 == 2);
  CHECK(e.d2 == 1);

  e = ell_pair(Rational(5, 8), Rational(1, 3));
  CHECK(e.ell1 == 3);
  CHECK(e.ell2 == 1);
  CHECK(e.branch == 1);
  CHECK(e.d1 == 8);
  CHECK(e.d2 == 3);

  CHECK(sharp(Rational(1, 2), Rational(1, 3)) == 4);
  CHECK(sharp(Rational(1, 3), Rational(1, 5)) == 1);

  CHECK_THROWS_AS(ell_pair(Rational(1, 3), Rational(1, 2)), precondition_error);
  CHECK_THROWS_AS(ell_pair(Rational(1, 2), Rational(1, 2)), precondition_error);
}

TEST_CASE("twisting numbers agree on both routes") {
  SeifertData trefoil = data("-1; 1/2, 1/3");
  TwistingResult h = twisting_number_height(trefoil);
  TwistingResult f = twisting_number_farey(trefoil);
  CHECK(h.q == 5);
  CHECK(h.height == 4);
  CHECK(h.sharp_value == 4);
  CHECK(f.q == 5);
  CHECK((f.p == std::vector<long long>{3, 2}));
  CHECK(twisting_number(f) == -5);

  TwistingResult s237 = twisting_number_farey(data("-1; 1/2, 1/3, 1/7"));
  CHECK(s237.q == 5);
  CHECK((s237.p == std::vector<long long>{3, 2, 1}));
  CHECK(twisting_number_height(data("-1; 1/2, 1/3, 1/7")).q == 5);

  TwistingResult flat = twisting_number_height(data("-2; 1/2, 1/2"));
  CHECK(flat.q == 1);
  CHECK(flat.height == 0);
  CHECK((twisting_number_farey(data("-2; 1/2, 1/2")).p ==
        std::vector<long long>{1, 1}));

  // q = 1 with e0 < -2 repairs the last numerator.
  TwistingResult deep = twisting_number_farey(data("-3; 1/2, 1/2"));
  CHECK(deep.q == 1);
  CHECK((deep.p == std::vector<long long>{1, 2}));

  CHECK_THROWS_AS(twisting_number_height(data("-1; 1/2")), precondition_error);
  CHECK_THROWS_AS(twisting_number_height(data("-1; 1/2, 1/2")), precondition_error);
  CHECK_THROWS_AS(twisting_number_farey(data("0; 1/2, 1/2")), precondition_error);
}

TEST_CASE("farey search agrees with the slope scan on two-leg data") {
  for (long long d1 = 2; d1 <= 9; ++d1)
    for (long long n1 = (d1 + 1) / 2; n1 < d1; ++n1) {
      if (std::gcd(n1, d1) != 1) continue;
      Rational r1(n1, d1);
      if (r1 < Rational(1, 2)) continue;
      for (long long d2 = 2; d2 <= 9; ++d2)
        for (long long n2 = 1; n2 < d2; ++n2) {
          if (std::gcd(n2, d2) != 1) continue;
          Rational r2(n2, d2);
          if (!(r2 <= r1) || !(r1 + r2 < Rational(1))) continue;
          SeifertData s(-1, {r1, r2});
          CHECK(farey_mediant_search(r1, r2).q == twisting_number_farey(s).q);
        }
    }
}

TEST_CASE("closed count of tight structures") {
  CHECK(count_tight(data("-2; 1/3, 1/3")) == 4);
  CHECK(count_tight(data("-3; 1/2")) == 2);
  CHECK(count_tight(data("-2; 1/2, 1/2, 1/2")) == 1);
  CHECK_THROWS_AS(count_tight(data("-1; 1/2, 1/3")), precondition_error);
  CHECK_THROWS_AS(count_tight(data("-2; 1/2, 1/2, 1/2, 1/2")), precondition_error);
}

TEST_CASE("blown-down presentations: standard graphs") {
  SurgeryPresentation e8 = blown_down_presentation(data("-2; 4/5, 2/3, 1/2"));
  CHECK(e8.tag == PresentationCase::standard_graph);
  CHECK(e8.matrix.size() == 8);
  CHECK(e8.det_matrix == 1);
  CHECK(e8.det_q == 1);
  CHECK(e8.collapsed_size == 0);

  SurgeryPresentation rp3 = blown_down_presentation(data("-2;"));
  CHECK(rp3.tag == PresentationCase::standard_graph);
  CHECK((rp3.matrix == std::vector<std::vector<long long>>{{-2}}));
  CHECK(rp3.det_matrix == -2);
}

TEST_CASE("blown-down presentations: cables of T(2,2)") {
  // Sigma(2,5,7): one truncation step on the first leg.
  SurgeryPresentation p = blown_down_presentation(data("-1; 1/2, 2/7, 1/5"));
  CHECK(p.tag == PresentationCase::cable_of_t22);
  CHECK(p.q == 3);
  CHECK(p.ell.ell1 == 1);
  CHECK(p.ell.ell2 == 0);
  CHECK(p.mu1 == -2);
  CHECK(p.mu2 == -3);
  REQUIRE(p.components.size() == 2);
  CHECK(p.components[0].role == "second");
  CHECK((p.components[0].chain == std::vector<long long>{-2, -2}));
  CHECK(p.components[1].role == "strand");
  CHECK((p.components[1].chain == std::vector<long long>{-3}));
  CHECK(p.components[1].head_topological == -3);
  CHECK((p.matrix == std::vector<std::vector<long long>>{
                        {-2, 1, 2}, {1, -2, 0}, {2, 0, -3}}));
  CHECK(p.det_matrix == -1);
  CHECK(abs(p.det_q) == 1);

  // The lens space of Figure 2.
  p = blown_down_presentation(data("-1; 1/3, 1/5"));
  CHECK(p.tag == PresentationCase::cable_of_t22);
  CHECK(p.q == 2);
  CHECK(p.mu1 == -2);
  CHECK(p.mu2 == -2);
  REQUIRE(p.components.size() == 2);
  CHECK(p.components[0].role == "first");
  CHECK((p.components[0].chain == std::vector<long long>{-2}));
  CHECK(p.components[1].role == "second");
  CHECK((p.components[1].chain == std::vector<long long>{-4}));
  CHECK(p.det_matrix == 7);
  CHECK(p.det_q == -7);

  // A fully truncated first leg drops out of the diagram.
  p = blown_down_presentation(data("-1; 2/3, 1/5"));
  CHECK(p.q == 4);
  CHECK(p.mu2 == -4);
  REQUIRE(p.components.size() == 1);
  CHECK(p.components[0].role == "second");
  CHECK((p.components[0].chain == std::vector<long long>{-2}));
  CHECK(p.det_matrix == -2);

  // Sigma(3,4,5): all three roles survive.
  p = blown_down_presentation(data("-1; 2/5, 1/3, 1/4"));
  CHECK(p.tag == PresentationCase::cable_of_t22);
  CHECK(p.q == 2);
  REQUIRE(p.components.size() == 3);
  CHECK((p.components[0].chain == std::vector<long long>{-2, -2}));
  CHECK((p.components[1].chain == std::vector<long long>{-2}));
  CHECK((p.components[2].chain == std::vector<long long>{-3}));
  CHECK((p.matrix == std::vector<std::vector<long long>>{{-2, 1, 1, 1},
                                                        {1, -2, 0, 0},
                                                        {1, 0, -2, 1},
                                                        {1, 0, 1, -3}}));
  CHECK(p.det_matrix == 1);
}

TEST_CASE("blown-down presentations: cables of T(3,3)") {
  SurgeryPresentation p = blown_down_presentation(data("-1; 4/7, 3/8"));
  CHECK(p.tag == PresentationCase::cable_of_t33);
  CHECK(p.q == 5);
  CHECK(p.ell.branch == 2);
  CHECK(p.mu1 == -3);
  CHECK(p.mu2 == -2);
  CHECK(p.t_run == 0);
  REQUIRE(p.components.size() == 2);
  CHECK((p.components[0].chain == std::vector<long long>{-2}));
  CHECK((p.components[1].chain == std::vector<long long>{-2}));
  CHECK(p.det_matrix == 3);

  // Sigma(2,3,7): both torus components truncate away entirely.
  p = blown_down_presentation(data("-1; 1/2, 1/3, 1/7"));
  CHECK(p.tag == PresentationCase::cable_of_t33);
  CHECK(p.q == 5);
  CHECK(p.t_run == 0);
  CHECK(p.mu1 == -3);
  CHECK(p.mu2 == -2);
  REQUIRE(p.components.size() == 1);
  CHECK(p.components[0].role == "strand");
  CHECK((p.components[0].chain == std::vector<long long>{-3}));
  CHECK(p.components[0].head_topological == -1);
  CHECK((p.matrix == std::vector<std::vector<long long>>{{-1}}));
  CHECK(p.det_matrix == -1);
  CHECK(p.det_q == 1);
}

TEST_CASE("blown-down presentations: trivial surgeries on S^3") {
  SurgeryPresentation p = blown_down_presentation(data("-1; 1/2, 1/3"));
  CHECK(p.components.empty());
  CHECK(p.graph_size == p.collapsed_size);
  CHECK(p.det_matrix == 1);

  p = blown_down_presentation(data("-1; 5/8, 1/3"));
  CHECK(p.tag == PresentationCase::cable_of_t33);
  CHECK(p.q == 11);
  CHECK(p.ell.ell1 == 3);
  CHECK(p.ell.ell2 == 1);
  CHECK(p.ell.branch == 1);
  CHECK(p.t_run == 1);
  CHECK(p.mu1 == -2);
  CHECK(p.mu2 == -4);
  CHECK(p.components.empty());
  CHECK(p.det_matrix == 1);

  CHECK_THROWS_AS(blown_down_presentation(data("-1; 1/2")), precondition_error);
}

TEST_CASE("self-conjugate fillability verdicts") {
  SeifertData rp3 = data("-2;");
  ObstructionReport r = spin_obstruction(rp3, CharVector{0});
  CHECK(r.spin);
  CHECK(r.even_form);
  CHECK(r.d3 == Rational(1, 4));
  CHECK(r.d == Rational(1, 4));
  CHECK(r.main_verdict ==
        "self-conjugate fillable structures exist; d = 1/4 >= d3 = 1/4 > 0 holds");

  r = spin_obstruction(rp3, CharVector{2});
  CHECK(r.d == Rational(-1, 4));
  CHECK(r.main_verdict ==
        "no self-conjugate fillable structure induces this class (d = -1/4 < d3 = 1/4)");

  // Odd blown-down form: L(3,1).
  SeifertData l31 = data("-3;");
  r = spin_obstruction(l31, CharVector{3});
  CHECK(!r.even_form);
  CHECK(r.main_verdict ==
        "no self-conjugate fillable structure (blown-down form not even)");

  CHECK_THROWS_AS(spin_obstruction(l31, CharVector{1}), precondition_error);
  CHECK_THROWS_AS(spin_obstruction(data("-1; 1/2, 1/3"), CharVector{1, 0, -1}),
                  precondition_error);
}

TEST_CASE("embedding obstructions") {
  // Every lens-space class passes the convex test.
  SeifertData lens = data("-1; 1/3, 1/5");
  HFBasis basis = hf_basis(seifert_to_graph(lens));
  for (const auto& gr : basis.groups) {
    ObstructionReport r = embedding_obstruction(lens, basis, gr.rep);
    CHECK(r.convex_verdict == "passes: dim of the hat group at d is 1");
    if (!gr.spin)
      CHECK(r.main_verdict == "not a spin class; the self-conjugacy test does not apply");
  }

  // Sigma(2,3,7) fails it: the hat group at d has rank two.
  SeifertData s237 = data("-1; 1/2, 1/3, 1/7");
  HFBasis b237 = hf_basis(seifert_to_graph(s237));
  ObstructionReport r = embedding_obstruction(s237, b237, b237.groups[0].rep);
  CHECK(r.convex_verdict == "fails: dim of the hat group at d is 2, not 1");
}

TEST_CASE("obstruction chains for Brieskorn spheres") {
  ObstructionReport r = brieskorn_embedding_report(BrieskornData({2, 3, 5}));
  CHECK(r.failed_stage == 1);
  CHECK(r.gompf_verdict == "obstructed (d = 2; an embedding forces d = 0)");

  std::vector<std::vector<long long>> even_cases{{2, 3, 7}, {3, 4, 5}, {2, 5, 7}};
  for (const auto& exps : even_cases) {
    r = brieskorn_embedding_report(BrieskornData(exps));
    CHECK(r.failed_stage == 2);
    CHECK(r.gompf_verdict == "obstructed (d=0; blown-down form not even)");
  }

  CHECK_THROWS_AS(brieskorn_embedding_report(BrieskornData({2, 3})),
                  precondition_error);
}

TEST_CASE("small sweeps run clean") {
  SweepGrid grid;
  grid.max_den = 5;
  SweepOutcome twist = twist_agreement_sweep(grid, 1);
  CHECK(twist.cases > 0);
  CHECK(twist.cases_e0_minus1 > 0);
  CHECK(twist.failures.empty());

  SweepOutcome present = presentation_sweep(7, 10, 6);
  CHECK(present.cases == 10);
  CHECK(present.failures.empty());
}
