#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "sfs/intersection_form.hpp"

namespace sfs {

// Characteristic covectors are stored by their values on the vertex basis:
// V[i] = <V, v_i>, with V[i] = Q[i][i] (mod 2) required.
using CharVector = std::vector<long long>;

inline bool is_characteristic(const IntersectionForm& f, const CharVector& v) {
  if (static_cast<int>(v.size()) != f.n) return false;
  for (int i = 0; i < f.n; ++i)
    if (((v[i] - f.diag[i]) % 2 + 2) % 2 != 0) return false;
  return true;
}

inline CharVector conjugate(const CharVector& v) {
  CharVector w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
  return w;
}

// The initial box: m(i) + 2 <= v_i <= -m(i) componentwise. Every class of
// the path relation below contains at least one such vector.
inline bool in_initial_box(const IntersectionForm& f, const CharVector& v) {
  for (int i = 0; i < f.n; ++i)
    if (v[i] < f.diag[i] + 2 || v[i] > -f.diag[i]) return false;
  return true;
}

// All initial-box characteristic vectors in lexicographic order. The box
// has prod |m(i)| points; callers keep graphs small enough for this.
inline std::vector<CharVector> enumerate_initial_vectors(const IntersectionForm& f) {
  for (int i = 0; i < f.n; ++i)
    if (f.diag[i] >= 0)
      throw precondition_error("initial box needs negative diagonal framings");
  std::vector<CharVector> out;
  CharVector v(f.n);
  for (int i = 0; i < f.n; ++i) v[i] = f.diag[i] + 2;
  while (true) {
    out.push_back(v);
    int i = f.n - 1;
    while (i >= 0) {
      v[i] += 2;
      if (v[i] <= -f.diag[i]) break;
      v[i] = f.diag[i] + 2;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

// Q^{-1} V as exact rationals.
inline std::vector<Rational> qinv_apply(const IntersectionForm& f, const CharVector& v) {
  std::vector<Rational> out(f.n, Rational(0));
  for (int i = 0; i < f.n; ++i) {
    Rational acc(0);
    for (int j = 0; j < f.n; ++j)
      if (v[j] != 0) acc += f.qinv[i][j] * Rational(v[j]);
    out[i] = acc;
  }
  return out;
}

// Componentwise fractional part of (1/2) Q^{-1} V. Two characteristic
// vectors V, W induce the same Spin^c structure iff (1/2) Q^{-1}(V - W) is
// integral, so this key is a complete class invariant. There are |det Q|
// distinct keys.
inline std::vector<Rational> spinc_key(const IntersectionForm& f, const CharVector& v) {
  std::vector<Rational> key = qinv_apply(f, v);
  for (auto& x : key) x = (x * Rational(1, 2)).frac();
  return key;
}

inline bool same_spinc(const IntersectionForm& f, const CharVector& a, const CharVector& b) {
  return spinc_key(f, a) == spinc_key(f, b);
}

// A structure is spin iff it equals its conjugate.
inline bool is_spin(const IntersectionForm& f, const CharVector& v) {
  return spinc_key(f, v) == spinc_key(f, conjugate(v));
}

// Maslov grading M(V) = (V^T Q^{-1} V + n) / 4. Stepping V -> V + 2Q e_j
// at a vertex with v_j = -Q[j][j] changes V^T Q^{-1} V by 4(v_j + Q[j][j]),
// which vanishes, so legal steps preserve the grading exactly.
inline Rational maslov_grading(const IntersectionForm& f, const CharVector& v) {
  auto qv = qinv_apply(f, v);
  Rational quad(0);
  for (int i = 0; i < f.n; ++i)
    if (v[i] != 0) quad += Rational(v[i]) * qv[i];
  return (quad + Rational(f.n)) * Rational(1, 4);
}

// Groups the initial box by Spin^c class. Group order is the lexicographic
// order of the canonical representatives (the lex-least initial vector in
// the class), so it is deterministic.
class SpincIndex {
 public:
  explicit SpincIndex(const IntersectionForm& f) : form_(&f) {
    auto box = enumerate_initial_vectors(f);
    std::map<std::vector<Rational>, std::vector<CharVector>> by_key;
    for (const auto& v : box) by_key[spinc_key(f, v)].push_back(v);
    Int classes = f.det < 0 ? Int(-f.det) : f.det;
    check_internal(Int(static_cast<long>(by_key.size())) == classes,
                   "number of Spin^c classes must equal |det Q|");
    // Box enumeration is lex, so members[0] of each group is the lex-least
    // vector; order groups by that canonical representative.
    std::vector<std::pair<CharVector, std::vector<CharVector>>> groups;
    for (auto& [key, members] : by_key) groups.emplace_back(members[0], std::move(members));
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [rep, members] : groups) {
      key_index_[spinc_key(f, rep)] = static_cast<int>(reps_.size());
      reps_.push_back(rep);
      members_.push_back(std::move(members));
    }
  }

  int size() const { return static_cast<int>(reps_.size()); }
  const CharVector& rep(int i) const { return reps_[i]; }
  const std::vector<CharVector>& members(int i) const { return members_[i]; }

  int index_of(const CharVector& v) const {
    auto it = key_index_.find(spinc_key(*form_, v));
    if (it == key_index_.end())
      throw precondition_error("vector does not represent a Spin^c class of this form");
    return it->second;
  }

 private:
  const IntersectionForm* form_;
  std::vector<CharVector> reps_;
  std::vector<std::vector<CharVector>> members_;
  std::map<std::vector<Rational>, int> key_index_;
};

}  // namespace sfs
