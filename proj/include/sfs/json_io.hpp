#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "sfs/contact.hpp"
#include "sfs/full_path.hpp"
#include "sfs/rational.hpp"
#include "sfs/seifert_data.hpp"
#include "sfs/star_graph.hpp"
#include "sfs/version.hpp"

// JSON views of the core types. nlohmann::json keeps object keys sorted,
// so dumps are byte-identical across runs. Gradings travel as {num, den}.

namespace sfs {

using Json = nlohmann::json;

inline Json rational_json(const Rational& r) {
  return Json{{"num", Rational::to_ll(r.num(), "json numerator")},
              {"den", Rational::to_ll(r.den(), "json denominator")}};
}

inline Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw parse_error("expected a {num, den} object");
  return Rational(j.at("num").get<long long>(), j.at("den").get<long long>());
}

inline Json graph_json(const StarGraph& g) {
  Json legs = Json::array();
  for (const auto& leg : g.legs) legs.push_back(leg);
  return Json{{"central", g.central}, {"legs", legs}, {"leaf", g.leaf}};
}

inline StarGraph graph_from_json(const Json& j) {
  StarGraph g;
  g.central = j.at("central").get<long long>();
  for (const auto& leg : j.at("legs")) g.legs.push_back(leg.get<std::vector<long long>>());
  if (j.contains("leaf")) g.leaf = j.at("leaf").get<int>();
  validate_graph(g);
  return g;
}

inline Json seifert_json(const SeifertData& s) {
  Json coeffs = Json::array();
  for (const auto& r : s.coeffs) coeffs.push_back(rational_json(r));
  return Json{{"e0", s.e0},
              {"coefficients", coeffs},
              {"euler", rational_json(euler_number(s))},
              {"from_torus_link", s.from_torus_link}};
}

inline SeifertData seifert_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(rational_from_json(c));
  bool allow_negative = j.value("from_torus_link", false);
  SeifertData s(j.at("e0").get<long long>(), coeffs, allow_negative);
  s.from_torus_link = allow_negative;
  return s;
}

inline Json metadata_json() {
  return Json{{"parity", "only the even part spanned by full paths is exposed"},
              {"step_tie_break", "smallest vertex index"},
              {"schema_version", kSchemaVersion},
              {"tool_version", kToolVersion}};
}

// The documented basis export: one entry per Spin^c structure with its
// correctly-ending classes and correction term.
inline Json basis_json(const HFBasis& basis) {
  Json groups = Json::array();
  for (const auto& grp : basis.groups) {
    Json classes = Json::array();
    for (int ci : grp.good_class_ids) {
      const auto& c = basis.classes[ci];
      classes.push_back(Json{{"initial", c.initial},
                             {"terminal", c.terminal},
                             {"maslov", rational_json(c.maslov)},
                             {"n_steps", c.steps.size()}});
    }
    groups.push_back(Json{{"spinc", grp.rep},
                          {"classes", classes},
                          {"d", rational_json(grp.d)},
                          {"spin", grp.spin},
                          {"conjugate", grp.conj},
                          {"dim_at_d", grp.dim_at_d}});
  }
  return Json{{"graph", graph_to_text(basis.graph)},
              {"det", basis.form.det.get_str()},
              {"l_space", basis.l_space},
              {"groups", groups},
              {"metadata", metadata_json()}};
}

inline Json presentation_json(const SurgeryPresentation& p) {
  const char* tag = p.tag == PresentationCase::standard_graph ? "standard graph"
                    : p.tag == PresentationCase::cable_of_t22 ? "cable of T(2,2)"
                                                              : "cable of T(3,3)";
  Json comps = Json::array();
  for (const auto& c : p.components)
    comps.push_back(Json{{"role", c.role},
                         {"chain", c.chain},
                         {"head_topological", c.head_topological}});
  Json j{{"case", tag},
         {"components", comps},
         {"linking_matrix", p.matrix},
         {"det_matrix", p.det_matrix.get_str()},
         {"det_graph", p.det_q.get_str()},
         {"graph_size", p.graph_size},
         {"collapsed_size", p.collapsed_size}};
  if (p.tag != PresentationCase::standard_graph) {
    j["q"] = p.q;
    j["mu"] = Json::array({p.mu1, p.mu2});
    j["truncation"] = Json{{"ell", Json::array({p.ell.ell1, p.ell.ell2})},
                           {"branch", p.ell.branch},
                           {"d", Json::array({Rational::to_ll(p.ell.d1, "d1"),
                                              Rational::to_ll(p.ell.d2, "d2")})},
                           {"t_run", p.t_run}};
    j["strand_linking_indirect"] = p.strand_linking_indirect;
  }
  return j;
}

inline Json obstruction_json(const ObstructionReport& rep) {
  Json j{{"group", rep.group},
         {"spin", rep.spin},
         {"d", rational_json(rep.d)},
         {"dim_at_d", rep.dim_at_d},
         {"convex_verdict", rep.convex_verdict},
         {"main_verdict", rep.main_verdict}};
  if (rep.has_presentation) {
    j["even_form"] = rep.even_form;
    j["d3"] = rational_json(rep.d3);
    j["presentation"] = presentation_json(rep.presentation);
  }
  if (rep.failed_stage != 0) {
    j["failed_stage"] = rep.failed_stage;
    j["gompf_verdict"] = rep.gompf_verdict;
  }
  return j;
}

// Cache payload: the complete class decomposition, members included, so a
// reload reproduces the basis without re-enumerating the initial box.
inline Json basis_cache_json(const HFBasis& basis) {
  Json classes = Json::array();
  for (const auto& c : basis.classes) {
    classes.push_back(Json{{"initial", c.initial},
                           {"terminal", c.terminal},
                           {"steps", c.steps},
                           {"ends_correctly", c.ends_correctly},
                           {"drop_vertex", c.drop_vertex},
                           {"maslov", rational_json(c.maslov)},
                           {"members", c.initial_members},
                           {"spinc", c.spinc}});
  }
  Json groups = Json::array();
  for (const auto& grp : basis.groups) {
    groups.push_back(Json{{"rep", grp.rep},
                          {"spin", grp.spin},
                          {"conj", grp.conj},
                          {"d", rational_json(grp.d)},
                          {"class_ids", grp.class_ids},
                          {"good_class_ids", grp.good_class_ids},
                          {"dim_at_d", grp.dim_at_d}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"tool_version", kToolVersion},
              {"key", graph_to_text(basis.graph)},
              {"classes", classes},
              {"groups", groups},
              {"l_space", basis.l_space}};
}

// Rebuilds a basis from the cache payload. The form is recomputed from the
// graph; stored traces are replayed step by step so a stale or corrupted
// entry fails loudly instead of skewing results.
inline HFBasis basis_from_cache_json(const StarGraph& g, const Json& j) {
  if (j.value("schema_version", -1) != kSchemaVersion ||
      j.value("tool_version", std::string()) != kToolVersion)
    throw parse_error("cache entry from another tool version");
  if (j.value("key", std::string()) != graph_to_text(g))
    throw parse_error("cache entry for a different graph");
  HFBasis basis;
  basis.graph = g;
  basis.form = intersection_form(g);
  for (const auto& cj : j.at("classes")) {
    FullPathClass c;
    c.initial = cj.at("initial").get<CharVector>();
    c.steps = cj.at("steps").get<std::vector<int>>();
    c.ends_correctly = cj.at("ends_correctly").get<bool>();
    c.drop_vertex = cj.at("drop_vertex").get<int>();
    c.maslov = rational_from_json(cj.at("maslov"));
    for (const auto& m : cj.at("members")) c.initial_members.push_back(m.get<CharVector>());
    c.spinc = cj.at("spinc").get<int>();
    CharVector v = c.initial;
    for (int step : c.steps) {
      if (step < 0 || step >= basis.form.n) throw parse_error("cache step out of range");
      v = path_step(basis.form, v, step);
    }
    c.terminal = v;
    if (c.terminal != cj.at("terminal").get<CharVector>())
      throw parse_error("cache trace does not replay to its terminal vector");
    if (maslov_grading(basis.form, c.initial) != c.maslov)
      throw parse_error("cache grading mismatch");
    basis.classes.push_back(std::move(c));
  }
  for (const auto& gj : j.at("groups")) {
    SpincGroup grp;
    grp.rep = gj.at("rep").get<CharVector>();
    grp.spin = gj.at("spin").get<bool>();
    grp.conj = gj.at("conj").get<int>();
    grp.d = rational_from_json(gj.at("d"));
    grp.class_ids = gj.at("class_ids").get<std::vector<int>>();
    grp.good_class_ids = gj.at("good_class_ids").get<std::vector<int>>();
    grp.dim_at_d = gj.at("dim_at_d").get<int>();
    basis.groups.push_back(std::move(grp));
  }
  basis.l_space = j.at("l_space").get<bool>();
  return basis;
}

}  // namespace sfs
