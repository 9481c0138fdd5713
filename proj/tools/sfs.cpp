// Command-line front end. Subcommands map onto the library one-to-one;
// all domain errors surface as exit codes: 1 malformed input, 2 violated
// precondition, 3 internal-consistency failure.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "sfs/cache.hpp"
#include "sfs/contact.hpp"
#include "sfs/filtration.hpp"
#include "sfs/full_path.hpp"
#include "sfs/json_io.hpp"
#include "sfs/sweep.hpp"
#include "sfs/torus_link.hpp"
#include "sfs/version.hpp"

namespace {

using sfs::Json;
using sfs::Rational;

// At most one of the three input flags per invocation.
struct Input {
  std::string seifert;
  std::string brieskorn;
  std::string graph;
};

sfs::SeifertData input_seifert(const Input& in) {
  if (!in.seifert.empty() && in.brieskorn.empty())
    return sfs::seifert_from_text(in.seifert);
  if (in.seifert.empty() && !in.brieskorn.empty())
    return sfs::brieskorn_to_seifert(sfs::brieskorn_from_text(in.brieskorn));
  throw sfs::parse_error("give exactly one of --seifert or --brieskorn");
}

sfs::StarGraph input_graph(const Input& in) {
  if (!in.graph.empty()) {
    if (!in.seifert.empty() || !in.brieskorn.empty())
      throw sfs::parse_error("give exactly one of --seifert, --brieskorn or --graph");
    return sfs::graph_from_text(in.graph);
  }
  return sfs::seifert_to_graph(input_seifert(in));
}

sfs::CharVector parse_char_vector(const std::string& text) {
  sfs::CharVector v;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string tok =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    Rational r = Rational::parse(tok);
    if (!r.is_integer())
      throw sfs::parse_error("spin^c vector entries must be integers, got " + tok);
    v.push_back(Rational::to_ll(r.num(), "spin^c entry"));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return v;
}

std::vector<std::vector<long long>> parse_matrix(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto semi = text.find(';', pos);
    std::string row =
        text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    std::vector<long long> entries;
    size_t ip = 0;
    while (ip <= row.size()) {
      auto comma = row.find(',', ip);
      std::string tok =
          row.substr(ip, comma == std::string::npos ? std::string::npos : comma - ip);
      Rational r = Rational::parse(tok);
      if (!r.is_integer())
        throw sfs::parse_error("matrix entries must be integers, got " + tok);
      entries.push_back(Rational::to_ll(r.num(), "matrix entry"));
      if (comma == std::string::npos) break;
      ip = comma + 1;
    }
    rows.push_back(std::move(entries));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return rows;
}

std::string vec_text(const std::vector<long long>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

std::string chain_text(const std::vector<long long>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

void emit_json(Json j) {
  j["metadata"] = sfs::metadata_json();
  std::cout << j.dump(2) << "\n";
}

void run_seifert(const Input& in, bool json) {
  sfs::SeifertData s = input_seifert(in);
  Rational e = sfs::euler_number(s);
  if (json) {
    Json j = sfs::seifert_json(s);
    j["negative_definite"] = e.sign() < 0;
    emit_json(std::move(j));
    return;
  }
  std::cout << "seifert: " << sfs::seifert_to_text(s) << "\n";
  std::cout << "e = " << e.str() << "\n";
  std::cout << "negative definite: " << (e.sign() < 0 ? "yes" : "no") << "\n";
}

void run_brieskorn(const std::string& text, bool json) {
  sfs::BrieskornData b = sfs::brieskorn_from_text(text);
  sfs::SeifertData s = sfs::brieskorn_to_seifert(b);
  if (json) {
    Json j{{"exponents", b.exponents}, {"seifert", sfs::seifert_json(s)}};
    emit_json(std::move(j));
    return;
  }
  std::string exps;
  for (size_t i = 0; i < b.exponents.size(); ++i)
    exps += (i ? "," : "") + std::to_string(b.exponents[i]);
  std::cout << "exponents: " << exps << "\n";
  std::cout << "seifert: " << sfs::seifert_to_text(s) << "\n";
  std::cout << "e = " << sfs::euler_number(s).str() << "\n";
}

void run_graph(const Input& in, bool json) {
  sfs::StarGraph g = input_graph(in);
  sfs::NdReport nd = sfs::is_negative_definite(g);
  // Determinant without inverting, so indefinite graphs still report.
  int n = g.size();
  std::vector<std::vector<sfs::Int>> q(n, std::vector<sfs::Int>(n, sfs::Int(0)));
  q[0][0] = sfs::to_int(g.central);
  for (size_t leg = 0; leg < g.legs.size(); ++leg)
    for (size_t pos = 0; pos < g.legs[leg].size(); ++pos) {
      int v = g.leg_vertex(leg, pos);
      q[v][v] = sfs::to_int(g.legs[leg][pos]);
      int prev = pos == 0 ? 0 : g.leg_vertex(leg, pos - 1);
      q[v][prev] = q[prev][v] = sfs::Int(1);
    }
  sfs::Int det = sfs::detail::int_det(q);
  if (json) {
    Json j = sfs::graph_json(g);
    j["size"] = n;
    j["det"] = det.get_str();
    j["euler"] = sfs::rational_json(nd.euler);
    j["negative_definite"] = nd.negative_definite;
    if (!nd.negative_definite) j["first_failing_minor"] = nd.first_failing_minor;
    emit_json(std::move(j));
    return;
  }
  std::cout << "graph: " << sfs::graph_to_text(g) << "\n";
  std::cout << "size = " << n << "\n";
  std::cout << "det Q = " << det.get_str() << "\n";
  std::cout << "e = " << nd.euler.str() << "\n";
  if (nd.negative_definite)
    std::cout << "negative definite: yes\n";
  else
    std::cout << "negative definite: no (first failing minor: " << nd.first_failing_minor
              << ")\n";
}

void print_group(const sfs::HFBasis& basis, size_t gi) {
  const sfs::SpincGroup& gr = basis.groups[gi];
  std::cout << "s" << gi << ": d = " << gr.d.str() << "; dim at d = " << gr.dim_at_d
            << "; rep = " << vec_text(gr.rep) << (gr.spin ? "; spin" : "") << "\n";
}

void run_hf(const Input& in, const std::string& cache_flag, const std::string& spinc_text,
            bool json) {
  sfs::StarGraph g = input_graph(in);
  sfs::HFBasis basis = sfs::hf_basis_cached(g, sfs::cache_directory(cache_flag));
  int selected = -1;
  if (!spinc_text.empty())
    selected = sfs::group_index_of(basis, parse_char_vector(spinc_text));
  if (json) {
    Json j = sfs::basis_json(basis);
    if (selected >= 0) j["selected_group"] = selected;
    std::cout << j.dump(2) << "\n";  // basis_json already carries metadata
    return;
  }
  if (selected >= 0) {
    print_group(basis, static_cast<size_t>(selected));
    return;
  }
  if (basis.groups.size() == 1) {
    std::cout << "spin^c classes: 1; d = " << basis.groups[0].d.str() << "\n";
    return;
  }
  std::cout << "spin^c classes: " << basis.groups.size()
            << "; L-space: " << (basis.l_space ? "yes" : "no") << "\n";
  for (size_t gi = 0; gi < basis.groups.size(); ++gi) print_group(basis, gi);
}

void run_twist(const Input& in, bool json) {
  sfs::SeifertData s = input_seifert(in);
  sfs::TwistingResult h = sfs::twisting_number_height(s);
  sfs::TwistingResult f = sfs::twisting_number_farey(s);
  sfs::check_internal(h.q == f.q, "height and farey routes disagree: q = " +
                                      std::to_string(h.q) + " vs " + std::to_string(f.q));
  long long tw = sfs::twisting_number(f);
  if (json) {
    Json j{{"tw", tw}, {"q", f.q}, {"height", h.height}, {"p", f.p}};
    emit_json(std::move(j));
    return;
  }
  std::string ps;
  for (size_t i = 0; i < f.p.size(); ++i) ps += (i ? "," : "") + std::to_string(f.p[i]);
  std::cout << "tw = " << tw << " (height: #=" << h.height << "; farey: q=" << f.q
            << ", p=" << ps << ")\n";
}

void run_classify(const Input& in, const std::string& cache_flag, bool json) {
  sfs::SeifertData s = input_seifert(in);
  if (s.e0 < -1) {
    sfs::Int count = sfs::count_tight(s);
    if (json) {
      emit_json(Json{{"tight_structures", count.get_str()}, {"exact", true}});
      return;
    }
    std::cout << "tight structures: " << count.get_str() << "\n";
    return;
  }
  // e0 = -1 has no closed count; report the correctly-ending classes as an
  // upper bound for the fillable structures.
  sfs::StarGraph g = sfs::seifert_to_graph(s);
  sfs::HFBasis basis = sfs::hf_basis_cached(g, sfs::cache_directory(cache_flag));
  long long good = 0;
  for (const sfs::SpincGroup& gr : basis.groups)
    good += static_cast<long long>(gr.good_class_ids.size());
  if (json) {
    emit_json(Json{{"correctly_ending_classes", good}, {"exact", false}});
    return;
  }
  std::cout << "correctly-ending classes: " << good << " (bound, not count)\n";
}

void run_present(const Input& in, bool json) {
  sfs::SeifertData s = input_seifert(in);
  sfs::SurgeryPresentation p = sfs::blown_down_presentation(s);
  if (json) {
    emit_json(sfs::presentation_json(p));
    return;
  }
  const char* tag = p.tag == sfs::PresentationCase::standard_graph ? "standard graph"
                    : p.tag == sfs::PresentationCase::cable_of_t22 ? "cable of T(2,2)"
                                                                   : "cable of T(3,3)";
  std::cout << "case: " << tag << "\n";
  std::cout << "graph size = " << p.graph_size << "; blown down = " << p.collapsed_size
            << "\n";
  if (p.tag != sfs::PresentationCase::standard_graph) {
    std::cout << "q = " << p.q << "; mu = (" << p.mu1 << ", " << p.mu2 << "); l = ("
              << p.ell.ell1 << ", " << p.ell.ell2 << "); branch " << p.ell.branch
              << "; d = (" << p.ell.d1.get_str() << ", " << p.ell.d2.get_str()
              << "); T = " << p.t_run << "\n";
  }
  std::cout << "components: " << p.components.size() << "\n";
  for (const sfs::PresentationComponent& c : p.components)
    std::cout << "  " << c.role << ": " << chain_text(c.chain)
              << "; topological head = " << c.head_topological << "\n";
  std::cout << "linking matrix: " << sfs::detail::matrix_to_string(p.matrix) << "\n";
  std::cout << "det matrix = " << p.det_matrix.get_str()
            << "; det graph = " << p.det_q.get_str() << "\n";
  if (p.strand_linking_indirect)
    std::cout << "note: strand-strand linking d1*d2 is confirmed only through the "
                 "det/rank validation\n";
}

void run_obstruct(const Input& in, const std::string& cache_flag,
                  const std::string& spinc_text, bool json) {
  if (!in.brieskorn.empty() && in.seifert.empty()) {
    sfs::BrieskornData b = sfs::brieskorn_from_text(in.brieskorn);
    sfs::ObstructionReport rep = sfs::brieskorn_embedding_report(b);
    if (json) {
      emit_json(sfs::obstruction_json(rep));
      return;
    }
    std::cout << rep.gompf_verdict << "\n";
    return;
  }
  sfs::SeifertData s = input_seifert(in);
  sfs::StarGraph g = sfs::seifert_to_graph(s);
  sfs::HFBasis basis = sfs::hf_basis_cached(g, sfs::cache_directory(cache_flag));
  if (!spinc_text.empty()) {
    sfs::ObstructionReport rep =
        sfs::embedding_obstruction(s, basis, parse_char_vector(spinc_text));
    if (json) {
      emit_json(sfs::obstruction_json(rep));
      return;
    }
    std::cout << "convex: " << rep.convex_verdict << "\n";
    std::cout << "main: " << rep.main_verdict << "\n";
    return;
  }
  if (json) {
    Json arr = Json::array();
    for (const sfs::SpincGroup& gr : basis.groups)
      arr.push_back(sfs::obstruction_json(sfs::embedding_obstruction(s, basis, gr.rep)));
    emit_json(Json{{"groups", std::move(arr)}});
    return;
  }
  std::cout << "spin^c classes: " << basis.groups.size() << "\n";
  for (size_t gi = 0; gi < basis.groups.size(); ++gi) {
    sfs::ObstructionReport rep =
        sfs::embedding_obstruction(s, basis, basis.groups[gi].rep);
    std::cout << "s" << gi << ": convex: " << rep.convex_verdict
              << "; main: " << rep.main_verdict << "\n";
  }
}

void run_torus_link(long long p, long long q, const std::string& sign_text,
                    const std::string& matrix_text, bool json) {
  int sign = 0;
  if (sign_text == "+" || sign_text == "plus") sign = 1;
  else if (sign_text == "-" || sign_text == "minus") sign = -1;
  else throw sfs::parse_error("--sign must be + or -, got '" + sign_text + "'");
  sfs::TorusLinkResult res =
      sfs::torus_link_to_seifert(p, q, sign, parse_matrix(matrix_text));
  if (json) {
    Json diag = Json::array();
    for (const sfs::Int& v : res.d_diag) diag.push_back(v.get_str());
    Json j{{"seifert", sfs::seifert_json(res.data)},
           {"d_diag", std::move(diag)},
           {"det_lambda", res.det_lambda.get_str()},
           {"det_d", res.det_d.get_str()}};
    emit_json(std::move(j));
    return;
  }
  std::cout << "seifert: " << sfs::seifert_to_text(res.data) << "\n";
  std::cout << "e = " << res.euler.str() << "\n";
}

void run_sweep(const std::string& suite, int max_den, long long stride, int jobs,
               unsigned long long seed, long long count, bool json) {
  sfs::SweepOutcome out;
  if (suite == "twist") {
    sfs::SweepGrid grid;
    grid.max_den = max_den > 0 ? max_den : 12;
    out = sfs::twist_agreement_sweep(grid, jobs, stride);
  } else if (suite == "present") {
    out = sfs::presentation_sweep(seed, count, max_den > 0 ? max_den : 10);
  } else {
    throw sfs::parse_error("--suite must be twist or present, got '" + suite + "'");
  }
  if (json) {
    Json j{{"suite", suite},
           {"cases", out.cases},
           {"failures", out.failures}};
    if (suite == "twist") j["cases_e0_minus1"] = out.cases_e0_minus1;
    emit_json(std::move(j));
  } else if (suite == "twist") {
    std::cout << "twist agreement sweep: " << out.cases << " cases ("
              << out.cases_e0_minus1 << " with e0 = -1); failures: "
              << out.failures.size() << "\n";
  } else {
    std::cout << "presentation sweep: " << out.cases
              << " cases; failures: " << out.failures.size() << "\n";
  }
  if (!out.failures.empty()) {
    for (const std::string& f : out.failures) std::cerr << "failure: " << f << "\n";
    throw sfs::internal_error(std::to_string(out.failures.size()) + " sweep failures");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of negative-definite Seifert fibred spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sfs::kToolVersion));

  Input in;
  bool json = false;
  std::string cache_flag;
  std::string spinc_text;
  std::function<void()> action;

  auto add_data_inputs = [&](CLI::App* sub, bool with_graph) {
    sub->add_option("--seifert", in.seifert, "Seifert data 'e0; r1, r2, ...'");
    sub->add_option("--brieskorn", in.brieskorn, "Brieskorn exponents 'a1,a2,...'");
    if (with_graph)
      sub->add_option("--graph", in.graph, "plumbing graph 'e0; [m11, m12] | [m21]'");
    sub->add_flag("--json", json, "emit the schema'd JSON document");
  };

  CLI::App* seifert_cmd =
      app.add_subcommand("seifert", "normalize Seifert data and report e(M)");
  add_data_inputs(seifert_cmd, false);
  seifert_cmd->callback([&] { action = [&] { run_seifert(in, json); }; });

  CLI::App* brieskorn_cmd =
      app.add_subcommand("brieskorn", "Seifert data of a Brieskorn sphere");
  brieskorn_cmd
      ->add_option("--brieskorn", in.brieskorn, "Brieskorn exponents 'a1,a2,...'")
      ->required();
  brieskorn_cmd->add_flag("--json", json, "emit the schema'd JSON document");
  brieskorn_cmd->callback([&] { action = [&] { run_brieskorn(in.brieskorn, json); }; });

  CLI::App* graph_cmd =
      app.add_subcommand("graph", "standard plumbing graph and its form");
  add_data_inputs(graph_cmd, true);
  graph_cmd->callback([&] { action = [&] { run_graph(in, json); }; });

  CLI::App* hf_cmd =
      app.add_subcommand("hf", "full-path classes, spin^c structures and d");
  add_data_inputs(hf_cmd, true);
  hf_cmd->add_option("--spinc", spinc_text, "characteristic vector 'v1,v2,...'");
  hf_cmd->add_option("--cache", cache_flag, "cache directory (default $SFS_CACHE_DIR)");
  hf_cmd->callback([&] { action = [&] { run_hf(in, cache_flag, spinc_text, json); }; });

  CLI::App* twist_cmd =
      app.add_subcommand("twist", "twisting number of the regular fibre, both routes");
  add_data_inputs(twist_cmd, false);
  twist_cmd->callback([&] { action = [&] { run_twist(in, json); }; });

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "count tight structures (e0 < -1) or bound them");
  add_data_inputs(classify_cmd, false);
  classify_cmd->add_option("--cache", cache_flag,
                           "cache directory (default $SFS_CACHE_DIR)");
  classify_cmd->callback([&] { action = [&] { run_classify(in, cache_flag, json); }; });

  CLI::App* present_cmd =
      app.add_subcommand("present", "blown-down surgery presentation");
  add_data_inputs(present_cmd, false);
  present_cmd->callback([&] { action = [&] { run_present(in, json); }; });

  CLI::App* obstruct_cmd =
      app.add_subcommand("obstruct", "convex and self-conjugate embedding obstructions");
  add_data_inputs(obstruct_cmd, false);
  obstruct_cmd->add_option("--spinc", spinc_text, "characteristic vector 'v1,v2,...'");
  obstruct_cmd->add_option("--cache", cache_flag,
                           "cache directory (default $SFS_CACHE_DIR)");
  obstruct_cmd->callback(
      [&] { action = [&] { run_obstruct(in, cache_flag, spinc_text, json); }; });

  long long tl_p = 0, tl_q = 0;
  std::string tl_sign = "+";
  std::string tl_matrix;
  CLI::App* torus_cmd =
      app.add_subcommand("torus-link", "Seifert data of a torus-link surgery");
  torus_cmd->add_option("--p", tl_p, "first torus parameter")->required();
  torus_cmd->add_option("--q", tl_q, "second torus parameter")->required();
  torus_cmd->add_option("--sign", tl_sign, "orientation sign, + or -");
  torus_cmd->add_option("--matrix", tl_matrix, "framing matrix 'a,b; c,d'")->required();
  torus_cmd->add_flag("--json", json, "emit the schema'd JSON document");
  torus_cmd->callback(
      [&] { action = [&] { run_torus_link(tl_p, tl_q, tl_sign, tl_matrix, json); }; });

  std::string suite;
  int sw_max_den = 0;
  long long sw_stride = 1;
  int sw_jobs = 0;
  unsigned long long sw_seed = 1;
  long long sw_count = 50;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "agreement and validation sweeps");
  sweep_cmd->add_option("--suite", suite, "twist or present")->required();
  sweep_cmd->add_option("--max-den", sw_max_den,
                        "largest coefficient denominator (twist: 12, present: 10)");
  sweep_cmd->add_option("--stride", sw_stride, "sample every k-th case (twist)");
  sweep_cmd->add_option("--jobs", sw_jobs, "worker threads, 0 = hardware (twist)");
  sweep_cmd->add_option("--seed", sw_seed, "random seed (present)");
  sweep_cmd->add_option("--count", sw_count, "number of random cases (present)");
  sweep_cmd->add_flag("--json", json, "emit the schema'd JSON document");
  sweep_cmd->callback([&] {
    action = [&] {
      run_sweep(suite, sw_max_den, sw_stride, sw_jobs, sw_seed, sw_count, json);
    };
  });

  try {
    app.parse(argc, argv);
    if (action) action();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const sfs::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sfs::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sfs::internal_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
