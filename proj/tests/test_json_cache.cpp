#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "sfs/cache.hpp"
#include "sfs/json_io.hpp"

using namespace sfs;

namespace {
StarGraph lens_graph() { return graph_from_text("-1; [-3] | [-5]"); }
}  // namespace

TEST_CASE("rational json round trip") {
  for (Rational r : {Rational(0), Rational(-7, 4), Rational(22, 7), Rational(5)}) {
    CHECK(rational_from_json(rational_json(r)) == r);
  }
  CHECK(rational_json(Rational(-1, 2))["num"] == -1);
  CHECK(rational_json(Rational(-1, 2))["den"] == 2);
}

TEST_CASE("graph and seifert json round trips") {
  StarGraph g = lens_graph();
  CHECK(graph_to_text(graph_from_json(graph_json(g))) == graph_to_text(g));

  SeifertData s = seifert_from_text("-2; 4/5, 2/3, 1/2");
  SeifertData back = seifert_from_json(seifert_json(s));
  CHECK(back.e0 == s.e0);
  CHECK(back.coeffs == s.coeffs);

  Json bad = graph_json(g);
  bad["central"] = 1;
  CHECK_THROWS_AS(graph_from_json(bad), precondition_error);
}

TEST_CASE("basis export schema") {
  HFBasis b = hf_basis(lens_graph());
  Json j = basis_json(b);
  CHECK(j.at("graph") == graph_to_text(lens_graph()));
  CHECK(j.at("det") == "-7");
  CHECK(j.at("l_space") == true);
  CHECK(j.at("groups").size() == 7);
  const Json& g0 = j.at("groups")[0];
  CHECK(g0.contains("spinc"));
  CHECK(g0.contains("classes"));
  CHECK(g0.contains("d"));
  CHECK(g0.contains("dim_at_d"));
  CHECK(g0.at("classes")[0].contains("maslov"));
  CHECK(g0.at("classes")[0].contains("n_steps"));
  CHECK(j.at("metadata").at("schema_version") == kSchemaVersion);

  // Identical input, byte-identical document.
  HFBasis b2 = hf_basis(lens_graph());
  CHECK(basis_json(b).dump() == basis_json(b2).dump());
}

TEST_CASE("cache round trip replays traces") {
  HFBasis b = hf_basis(lens_graph());
  Json payload = basis_cache_json(b);
  HFBasis back = basis_from_cache_json(lens_graph(), payload);
  CHECK(basis_json(back).dump() == basis_json(b).dump());

  Json wrong_version = payload;
  wrong_version["tool_version"] = "0.0.0";
  CHECK_THROWS_AS(basis_from_cache_json(lens_graph(), wrong_version), parse_error);

  Json wrong_graph = payload;
  wrong_graph["key"] = "-2;";
  CHECK_THROWS_AS(basis_from_cache_json(lens_graph(), wrong_graph), parse_error);

  Json corrupt = payload;
  corrupt["classes"][0]["terminal"][0] = 99;
  CHECK_THROWS_AS(basis_from_cache_json(lens_graph(), corrupt), parse_error);
}

TEST_CASE("on-disk cache is transparent") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sfs_cache_test";
  fs::remove_all(dir);

  HFBasis plain = hf_basis(lens_graph());
  HFBasis first = hf_basis_cached(lens_graph(), dir.string());
  CHECK(fs::exists(cache_entry_path(dir.string(), lens_graph())));
  HFBasis second = hf_basis_cached(lens_graph(), dir.string());
  CHECK(basis_json(first).dump() == basis_json(plain).dump());
  CHECK(basis_json(second).dump() == basis_json(plain).dump());

  // A corrupted entry falls back to recomputation.
  {
    std::ofstream out(cache_entry_path(dir.string(), lens_graph()));
    out << "not json";
  }
  HFBasis healed = hf_basis_cached(lens_graph(), dir.string());
  CHECK(basis_json(healed).dump() == basis_json(plain).dump());

  // Disabled cache computes directly.
  HFBasis off = hf_basis_cached(lens_graph(), "");
  CHECK(basis_json(off).dump() == basis_json(plain).dump());

  fs::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
  CHECK(cache_directory("/tmp/explicit") == "/tmp/explicit");
  setenv("SFS_CACHE_DIR", "/tmp/from_env", 1);
  CHECK(cache_directory("") == "/tmp/from_env");
  CHECK(cache_directory("/tmp/explicit") == "/tmp/explicit");
  unsetenv("SFS_CACHE_DIR");
  CHECK(cache_directory("") == "");
}

TEST_CASE("presentation and obstruction json") {
  SeifertData s = seifert_from_text("-1; 1/2, 1/3, 1/7");
  Json pj = presentation_json(blown_down_presentation(s));
  CHECK(pj.at("case") == "cable of T(3,3)");
  CHECK(pj.at("q") == 5);
  CHECK(pj.at("det_graph") == "1");
  CHECK(pj.at("truncation").at("branch") == 2);

  Json oj = obstruction_json(brieskorn_embedding_report(BrieskornData({2, 3, 7})));
  CHECK(oj.at("failed_stage") == 2);
  CHECK(oj.at("gompf_verdict") == "obstructed (d=0; blown-down form not even)");
  CHECK(oj.at("even_form") == false);
}
