#include <doctest.h>

#include "sfs/filtration.hpp"
#include "sfs/seifert_data.hpp"

using namespace sfs;

namespace {
HFBasis basis_of(const char* seifert_text) {
  return hf_basis(seifert_to_graph(seifert_from_text(seifert_text)));
}
}  // namespace

TEST_CASE("filtration on the unknot graph") {
  HFBasis b = hf_basis(graph_from_text("-1;"));
  CHECK((alexander_filtration(b.form, {1}, 0) == Rational(0)));
  CHECK((alexander_filtration(b.form, {-1}, 0) == Rational(1)));
  CHECK(height_of_class(b, 0) == 1);
  CHECK(tau_of_class(b, 0) == Rational(0));
  TbBounds tb = max_tb(b);
  CHECK(tb.max_tb == Rational(-1));
  CHECK(tb.sl_bound == Rational(-1));
}

TEST_CASE("filtration climbs on the trefoil canonical path") {
  HFBasis b = basis_of("-1; 1/2, 1/3");
  CharVector vcan = canonical_vector(b.form);
  CHECK((vcan == CharVector{1, 0, -1}));
  PathTrace t = run_full_path(b.form, vcan);
  CHECK(alexander_filtration(b.form, t.start, 0) == Rational(1));
  CHECK(alexander_filtration(b.form, t.end, 0) == Rational(5));
  verify_path_invariants(b.form, t.start, t.steps);

  CHECK(height_of_class(b, canonical_class_id(b)) == 4);
  TbBounds tb = max_tb(b);
  CHECK(tb.tau_can == Rational(1));
  CHECK(tb.tau_conj == Rational(1));
  CHECK(tb.max_tb == Rational(1));
  CHECK(tb.sl_bound == Rational(1));
}

TEST_CASE("lens space bounds") {
  HFBasis b = basis_of("-1; 1/3, 1/5");
  CHECK(height_of_class(b, canonical_class_id(b)) == 1);
  TbBounds tb = max_tb(b);
  CHECK(tb.tau_can == Rational(1));
  CHECK(tb.tau_conj == Rational(1, 7));
  CHECK(tb.max_tb == Rational(1, 7));
}

TEST_CASE("torus knot T(2,5) fibre bound") {
  HFBasis b = basis_of("-1; 1/2, 2/5");
  TbBounds tb = max_tb(b);
  CHECK(tb.max_tb == Rational(3));
}

TEST_CASE("conjugate classes pair up") {
  HFBasis b = basis_of("-1; 1/3, 1/5");
  for (const auto& gr : b.groups)
    for (int ci : gr.good_class_ids) {
      int cj = conjugate_class_id(b, ci);
      CHECK(conjugate_class_id(b, cj) == ci);
      CHECK(b.classes[ci].maslov == b.classes[cj].maslov);
      CHECK(height_of_class(b, ci) == height_of_class(b, cj));
    }
}

TEST_CASE("canonical class minimizes height") {
  for (const char* text : {"-1; 1/2, 1/3", "-1; 1/3, 1/5", "-2; 4/5, 2/3, 1/2",
                           "-1; 1/2, 1/3, 1/7", "-2; 1/2, 1/3"}) {
    HFBasis b = basis_of(text);
    long long h_can = height_of_class(b, canonical_class_id(b));
    for (const auto& gr : b.groups)
      for (int ci : gr.good_class_ids) CHECK(h_can <= height_of_class(b, ci));
  }
}
