#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sfs/error.hpp"
#include "sfs/full_path.hpp"
#include "sfs/intersection_form.hpp"
#include "sfs/rational.hpp"
#include "sfs/spinc.hpp"
#include "sfs/star_graph.hpp"

namespace sfs {

// Filtration induced by a meridian leaf hanging off one vertex of the
// graph (the generic fibre hangs off the central vertex, index 0). Other
// placements are computed identically but flagged unchecked: the lemma
// that orders initial vectors by filtration value is only available for
// the central placement.

inline int effective_leaf(const HFBasis& b, int leaf) {
  int l = leaf < 0 ? b.graph.leaf : leaf;
  if (l < 0 || l >= b.form.n) throw precondition_error("leaf vertex out of range");
  return l;
}

inline bool leaf_placement_checked(int leaf) { return leaf == 0; }

// F(V) = (1/2)(-e1^T Qinv e1 + e1^T Qinv V), e1 the leaf vertex.
inline Rational alexander_filtration(const IntersectionForm& f, const CharVector& v,
                                     int leaf = 0) {
  if (leaf < 0 || leaf >= f.n) throw precondition_error("leaf vertex out of range");
  if (!is_characteristic(f, v))
    throw precondition_error("filtration needs a characteristic vector");
  Rational acc = -f.qinv[leaf][leaf];
  for (int i = 0; i < f.n; ++i) acc += f.qinv[leaf][i] * Rational(v[i]);
  return acc / Rational(2);
}

// Recomputes grading and filtration at every step of a recorded trace:
// the grading must not move, and the filtration climbs by exactly 1 at
// steps on the leaf vertex and stays put everywhere else.
inline void verify_path_invariants(const IntersectionForm& f, const CharVector& start,
                                   const std::vector<int>& steps, int leaf = 0) {
  CharVector v = start;
  Rational grading = maslov_grading(f, v);
  Rational filt = alexander_filtration(f, v, leaf);
  for (int j : steps) {
    v = path_step(f, v, j);
    check_internal(maslov_grading(f, v) == grading, "grading is constant along a path");
    Rational next = alexander_filtration(f, v, leaf);
    Rational delta = next - filt;
    check_internal(delta == Rational(j == leaf ? 1 : 0),
                   "filtration climbs by 1 exactly at leaf steps");
    filt = next;
  }
}

// Height: number of leaf steps in the trace, cross-checked against the
// filtration gap F(terminal) - F(initial).
inline long long height_of_class(const HFBasis& b, int class_id, int leaf = -1) {
  int l = effective_leaf(b, leaf);
  const FullPathClass& c = b.classes.at(class_id);
  if (!c.ends_correctly) throw precondition_error("height needs a correctly-ending class");
  long long count = std::count(c.steps.begin(), c.steps.end(), l);
  Rational gap = alexander_filtration(b.form, c.terminal, l) -
                 alexander_filtration(b.form, c.initial, l);
  check_internal(gap == Rational(count),
                 "height by step count agrees with the filtration gap");
  return count;
}

// tau of a correctly-ending class: (1/2)(1/(-e) + e1^T Qinv V_init).
inline Rational tau_of_class(const HFBasis& b, int class_id, int leaf = -1) {
  int l = effective_leaf(b, leaf);
  const FullPathClass& c = b.classes.at(class_id);
  if (!c.ends_correctly) throw precondition_error("tau needs a correctly-ending class");
  Rational e = graph_euler(b.graph);
  Rational acc = (-e).reciprocal();
  for (int i = 0; i < b.form.n; ++i) acc += b.form.qinv[l][i] * Rational(c.initial[i]);
  return acc / Rational(2);
}

// Minimal tau among the classes of the group that realise its correction
// term (the top grading).
inline Rational tau_min(const HFBasis& b, int group_id, int leaf = -1) {
  const SpincGroup& grp = b.groups.at(group_id);
  bool first = true;
  Rational best;
  for (int ci : grp.good_class_ids) {
    if (b.classes[ci].maslov != grp.d) continue;
    Rational t = tau_of_class(b, ci, leaf);
    if (first || t < best) best = t;
    first = false;
  }
  check_internal(!first, "some class realises the top grading");
  return best;
}

// The canonical vector v_i = m_i + 2 sits in the initial box of every
// graph; its class minimises the height.
inline CharVector canonical_vector(const IntersectionForm& f) {
  CharVector v(f.n);
  for (int i = 0; i < f.n; ++i) v[i] = f.diag[i] + 2;
  return v;
}

inline int canonical_class_id(const HFBasis& b) {
  CharVector want = canonical_vector(b.form);
  for (size_t ci = 0; ci < b.classes.size(); ++ci) {
    const auto& mem = b.classes[ci].initial_members;
    if (std::find(mem.begin(), mem.end(), want) != mem.end()) {
      check_internal(b.classes[ci].ends_correctly, "the canonical class ends correctly");
      return static_cast<int>(ci);
    }
  }
  throw internal_error("canonical vector lies in the initial box");
}

// The conjugate of a correctly-ending class is the class starting at
// minus its terminal vector; it ends correctly by symmetry.
inline int conjugate_class_id(const HFBasis& b, int class_id) {
  CharVector want = conjugate(b.classes.at(class_id).terminal);
  for (size_t ci = 0; ci < b.classes.size(); ++ci)
    if (b.classes[ci].ends_correctly && b.classes[ci].initial == want)
      return static_cast<int>(ci);
  throw internal_error("conjugate class ends correctly");
}

struct TbBounds {
  Rational tau_can;
  Rational tau_conj;
  Rational max_tb;     // tau_can + tau_conj - 1
  Rational sl_bound;   // 2 max(tau_can, tau_conj) - 1
  int can_class = -1;
  int conj_class = -1;
  bool unchecked_placement = false;
};

inline TbBounds max_tb(const HFBasis& b, int leaf = -1) {
  int l = effective_leaf(b, leaf);
  TbBounds r;
  r.unchecked_placement = !leaf_placement_checked(l);
  r.can_class = canonical_class_id(b);
  r.conj_class = conjugate_class_id(b, r.can_class);
  r.tau_can = tau_of_class(b, r.can_class, l);
  r.tau_conj = tau_of_class(b, r.conj_class, l);
  r.max_tb = r.tau_can + r.tau_conj - Rational(1);
  r.sl_bound = Rational(2) * std::max(r.tau_can, r.tau_conj) - Rational(1);
  return r;
}

}  // namespace sfs
