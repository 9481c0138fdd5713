#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "sfs/cont_frac.hpp"
#include "sfs/seifert_data.hpp"

namespace sfs {

// Star-shaped plumbing tree: one central vertex of framing `central`,
// plus one chain ("leg") per coefficient, each entry <= -2.
//
// Vertex numbering: 0 is the central vertex, then the legs in order,
// each root-to-tip. `leaf` marks the vertex the meridian/filtration
// construction attaches to; 0 (the central vertex) is the standard choice.
struct StarGraph {
  long long central = -1;
  std::vector<std::vector<long long>> legs;
  int leaf = 0;

  int size() const {
    int n = 1;
    for (const auto& l : legs) n += static_cast<int>(l.size());
    return n;
  }

  long long framing(int v) const {
    if (v == 0) return central;
    int idx = v - 1;
    for (const auto& l : legs) {
      if (idx < static_cast<int>(l.size())) return l[idx];
      idx -= static_cast<int>(l.size());
    }
    throw precondition_error("vertex index out of range");
  }

  int leg_vertex(size_t leg, size_t pos) const {
    int v = 1;
    for (size_t i = 0; i < leg; ++i) v += static_cast<int>(legs[i].size());
    return v + static_cast<int>(pos);
  }
};

inline void validate_graph(const StarGraph& g) {
  if (g.central > -1) throw precondition_error("central framing must be <= -1");
  for (const auto& l : g.legs) {
    if (l.empty()) throw precondition_error("legs must be non-empty");
    for (long long m : l)
      if (m > -2) throw precondition_error("leg framings must be <= -2");
  }
  if (g.leaf < 0 || g.leaf >= g.size())
    throw precondition_error("leaf vertex out of range");
}

// Legs are the inverted continued-fraction expansions of the coefficients:
// leg i carries [m_1, ..., m_k] with -1/[m_1, ..., m_k] = r_i.
inline StarGraph seifert_to_graph(const SeifertData& s) {
  if (s.from_torus_link)
    for (const auto& r : s.coeffs)
      if (r.sign() < 0)
        throw precondition_error("standard plumbing needs coefficients in (0, 1)");
  StarGraph g;
  g.central = s.e0;
  for (const auto& r : s.coeffs) g.legs.push_back(leg_of_coefficient(r));
  validate_graph(g);
  return g;
}

inline SeifertData graph_to_seifert(const StarGraph& g) {
  validate_graph(g);
  std::vector<Rational> rs;
  for (const auto& l : g.legs) rs.push_back(-nc_eval(l).reciprocal());
  return SeifertData(g.central, std::move(rs));
}

inline Rational graph_euler(const StarGraph& g) {
  Rational e(g.central);
  for (const auto& l : g.legs) e += -nc_eval(l).reciprocal();
  return e;
}

// Text form: "e0; [m11, m12] | [m21]" with an optional " @v" suffix giving
// the leaf vertex 1-based when it is not the central vertex.
inline std::string graph_to_text(const StarGraph& g) {
  std::ostringstream os;
  os << g.central << ";";
  for (size_t i = 0; i < g.legs.size(); ++i) {
    os << (i ? " | [" : " [");
    for (size_t j = 0; j < g.legs[i].size(); ++j) os << (j ? ", " : "") << g.legs[i][j];
    os << "]";
  }
  if (g.leaf != 0) os << " @" << (g.leaf + 1);
  return os.str();
}

inline StarGraph graph_from_text(const std::string& text) {
  StarGraph g;
  std::string body = text;
  auto at = body.rfind('@');
  if (at != std::string::npos) {
    Rational v = Rational::parse(body.substr(at + 1));
    if (!v.is_integer() || v < Rational(1))
      throw parse_error("leaf marker must be a positive integer");
    g.leaf = static_cast<int>(Rational::to_ll(v.num(), "leaf")) - 1;
    body = body.substr(0, at);
  }
  auto semi = body.find(';');
  if (semi == std::string::npos)
    throw parse_error("expected 'e0; [..] | [..]', got '" + text + "'");
  Rational e0 = Rational::parse(body.substr(0, semi));
  if (!e0.is_integer()) throw parse_error("central framing must be an integer");
  g.central = Rational::to_ll(e0.num(), "central framing");
  size_t pos = semi + 1;
  while (pos < body.size()) {
    char c = body[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '|') {
      ++pos;
      continue;
    }
    if (c != '[') throw parse_error("expected '[' in '" + text + "'");
    auto close = body.find(']', pos);
    if (close == std::string::npos) throw parse_error("unbalanced '[' in '" + text + "'");
    std::string inner = body.substr(pos + 1, close - pos - 1);
    std::vector<long long> leg;
    size_t ip = 0;
    while (ip <= inner.size() && !inner.empty()) {
      auto comma = inner.find(',', ip);
      std::string tok = inner.substr(ip, comma == std::string::npos ? std::string::npos
                                                                    : comma - ip);
      Rational m = Rational::parse(tok);
      if (!m.is_integer()) throw parse_error("leg framings must be integers");
      leg.push_back(Rational::to_ll(m.num(), "framing"));
      if (comma == std::string::npos) break;
      ip = comma + 1;
    }
    g.legs.push_back(std::move(leg));
    pos = close + 1;
  }
  validate_graph(g);
  return g;
}

inline bool operator==(const StarGraph& a, const StarGraph& b) {
  return a.central == b.central && a.legs == b.legs && a.leaf == b.leaf;
}

}  // namespace sfs
