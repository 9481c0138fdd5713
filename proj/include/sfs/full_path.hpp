#pragma once

#include <map>
#include <set>
#include <vector>

#include "sfs/spinc.hpp"

namespace sfs {

// The path relation on characteristic vectors of a negative-definite form:
// from V, if some coordinate has |v_i| > -m(i) the path "drops out" at the
// smallest such i; otherwise, if some v_j = -m(j), step to V + 2 Q e_j at
// the smallest such j; otherwise V is terminal (m(i) <= v_i <= -m(i) - 2
// for every i). The three cases are exhaustive and mutually exclusive.
//
// A path that reaches a terminal vector "ends correctly". A correctly
// ending class contains exactly one initial-box vector; a Spin^c structure
// may carry several correctly-ending classes, and its top correction term
// is the largest grading among them.

struct PathTrace {
  CharVector start;
  CharVector end;
  std::vector<int> steps;            // vertex stepped at, in order
  bool ends_correctly = false;
  int drop_vertex = -1;              // smallest offending vertex on drop-out
  std::vector<CharVector> visited;   // start, ..., end inclusive
};

// -1: drop-out; -2: terminal; otherwise the vertex to step at.
inline int path_next_vertex(const IntersectionForm& f, const CharVector& v, int* drop) {
  for (int i = 0; i < f.n; ++i)
    if (v[i] > -f.diag[i] || v[i] < f.diag[i]) {
      if (drop) *drop = i;
      return -1;
    }
  for (int j = 0; j < f.n; ++j)
    if (v[j] == -f.diag[j]) return j;
  return -2;
}

inline CharVector path_step(const IntersectionForm& f, const CharVector& v, int j) {
  CharVector w = v;
  for (int i = 0; i < f.n; ++i) w[i] += 2 * f.q[i][j];
  return w;
}

// Walks the path relation from `start` to its end. The step V -> V + 2Qe_j
// strictly changes V (Q is nonsingular), and no vector can repeat: a cycle
// would force 2Q(sum e_j) = 0 over a nonempty nonnegative multiset of
// steps. The visited set keeps that theorem honest at runtime.
inline PathTrace run_full_path(const IntersectionForm& f, const CharVector& start) {
  if (!is_characteristic(f, start))
    throw precondition_error("full path needs a characteristic vector");
  PathTrace t;
  t.start = start;
  CharVector v = start;
  std::set<CharVector> seen;
  for (;;) {
    check_internal(seen.insert(v).second, "path relation revisited a vector");
    t.visited.push_back(v);
    int drop = -1;
    int nxt = path_next_vertex(f, v, &drop);
    if (nxt == -1) {
      t.end = v;
      t.ends_correctly = false;
      t.drop_vertex = drop;
      return t;
    }
    if (nxt == -2) {
      t.end = v;
      t.ends_correctly = true;
      return t;
    }
    t.steps.push_back(nxt);
    v = path_step(f, v, nxt);
  }
}

struct FullPathClass {
  CharVector initial;                  // lex-least initial-box member
  CharVector terminal;                 // end of the traced path
  std::vector<int> steps;              // trace from `initial`
  bool ends_correctly = false;
  int drop_vertex = -1;
  Rational maslov;                     // grading of `initial` (= of `terminal`)
  std::vector<CharVector> initial_members;
  int spinc = -1;                      // group index in the basis
};

struct SpincGroup {
  CharVector rep;                      // canonical representative (lex-least initial vector)
  bool spin = false;
  int conj = -1;                       // index of the conjugate group
  Rational d;                          // top grading among correct enders
  std::vector<int> class_ids;          // all path classes in this group
  std::vector<int> good_class_ids;     // those that end correctly
  int dim_at_d = 0;                    // correct enders sitting exactly at d
};

struct HFBasis {
  StarGraph graph;
  IntersectionForm form;
  std::vector<FullPathClass> classes;  // ordered by lex order of `initial`
  std::vector<SpincGroup> groups;      // ordered by lex order of `rep`
  bool l_space = false;

  const SpincGroup& group_of(const CharVector& rep_or_member) const;
};

namespace detail {

inline void trace_all_classes(const IntersectionForm& f, std::vector<FullPathClass>& classes) {
  auto box = enumerate_initial_vectors(f);
  std::map<CharVector, int> owner;    // visited vector -> class id
  for (const auto& v0 : box) {
    auto it = owner.find(v0);
    if (it != owner.end()) {
      classes[it->second].initial_members.push_back(v0);
      continue;
    }
    PathTrace t = run_full_path(f, v0);
    int id = static_cast<int>(classes.size());
    bool merged = false;
    for (const auto& v : t.visited) {
      auto [vit, fresh] = owner.emplace(v, id);
      if (!fresh) {
        // The walk joined an already-traced path; everything from here on
        // is known. Re-own the fresh prefix to the existing class.
        int target = vit->second;
        for (const auto& w : t.visited) {
          auto wit = owner.find(w);
          if (wit != owner.end() && wit->second == id) wit->second = target;
          if (w == v) break;
        }
        classes[target].initial_members.push_back(v0);
        merged = true;
        break;
      }
    }
    if (merged) continue;
    FullPathClass c;
    c.initial = v0;                    // box is lex-ordered, so first touch is lex-least
    c.terminal = t.end;
    c.steps = t.steps;
    c.ends_correctly = t.ends_correctly;
    c.drop_vertex = t.drop_vertex;
    c.maslov = maslov_grading(f, v0);
    c.initial_members.push_back(v0);
    classes.push_back(std::move(c));
  }
}

}  // namespace detail

// Full decomposition of the initial box into path classes, grouped by
// Spin^c structure. Requires a negative-definite form; hf_basis checks
// this on the graph, hf_basis_on_form trusts the caller's matrix but
// still insists on definiteness.
inline HFBasis hf_basis_on_form(const IntersectionForm& f, const StarGraph& g) {
  if (!matrix_negative_definite(f.q))
    throw precondition_error("path classes need a negative-definite form");
  HFBasis basis;
  basis.graph = g;
  basis.form = f;
  detail::trace_all_classes(f, basis.classes);

  SpincIndex index(f);
  std::vector<SpincGroup> groups(index.size());
  for (int gi = 0; gi < index.size(); ++gi) groups[gi].rep = index.rep(gi);
  for (size_t ci = 0; ci < basis.classes.size(); ++ci) {
    auto& c = basis.classes[ci];
    c.spinc = index.index_of(c.initial);
    groups[c.spinc].class_ids.push_back(static_cast<int>(ci));
    if (c.ends_correctly) groups[c.spinc].good_class_ids.push_back(static_cast<int>(ci));
  }
  basis.l_space = true;
  for (int gi = 0; gi < index.size(); ++gi) {
    auto& grp = groups[gi];
    check_internal(!grp.good_class_ids.empty(),
                   "every Spin^c structure contains a correctly-ending path");
    grp.spin = is_spin(f, grp.rep);
    grp.conj = index.index_of(conjugate(grp.rep));
    bool first = true;
    for (int ci : grp.good_class_ids) {
      check_internal(basis.classes[ci].initial_members.size() == 1,
                     "a correctly-ending class has a unique initial vector");
      const Rational& m = basis.classes[ci].maslov;
      if (first || m > grp.d) grp.d = m;
      first = false;
    }
    for (int ci : grp.good_class_ids)
      if (basis.classes[ci].maslov == grp.d) ++grp.dim_at_d;
    if (grp.good_class_ids.size() != 1) basis.l_space = false;
  }
  // Conjugation symmetry of the correction terms, checked exactly.
  for (int gi = 0; gi < index.size(); ++gi)
    check_internal(groups[gi].d == groups[groups[gi].conj].d,
                   "correction terms must be conjugation-invariant");
  basis.groups = std::move(groups);

  // Grading sanity: the grading of each correct ender matches at both ends
  // of its trace (steps preserve it identically; this guards the exact
  // arithmetic end to end).
  for (const auto& c : basis.classes) {
    if (!c.ends_correctly) continue;
    check_internal(maslov_grading(f, c.terminal) == c.maslov,
                   "grading must match at both ends of a path");
  }
  return basis;
}

inline HFBasis hf_basis(const StarGraph& g) {
  NdReport nd = is_negative_definite(g);
  if (!nd.negative_definite)
    throw precondition_error("plumbing is not negative definite (e = " +
                             nd.euler.str() + " >= 0)");
  return hf_basis_on_form(intersection_form(g), g);
}

inline const SpincGroup& HFBasis::group_of(const CharVector& v) const {
  SpincIndex index(form);
  return groups[index.index_of(v)];
}

// Correction term d of a Spin^c class, the grading of its unique
// correctly-ending path.
inline Rational correction_term(const HFBasis& basis, int group) {
  return basis.groups.at(group).d;
}

// For integer homology spheres there is a single class.
inline Rational correction_term(const HFBasis& basis) {
  if (basis.groups.size() != 1)
    throw precondition_error("single correction term needs |det Q| = 1");
  return basis.groups[0].d;
}

inline int hf_hat_dim_at(const HFBasis& basis, int group, const Rational& grading) {
  int dim = 0;
  for (int ci : basis.groups.at(group).good_class_ids)
    if (basis.classes[ci].maslov == grading) ++dim;
  return dim;
}

inline bool is_l_space(const HFBasis& basis) { return basis.l_space; }

}  // namespace sfs
