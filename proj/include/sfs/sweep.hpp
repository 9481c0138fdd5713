#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "sfs/contact.hpp"
#include "sfs/rational.hpp"
#include "sfs/seifert_data.hpp"

// Parameter-grid suites behind the `sweep` subcommand and the acceptance
// checks. Work is fanned out over a thread pool; every result lands in a
// slot indexed by its case number, so output is deterministic regardless
// of the worker count.

namespace sfs {

// All reduced fractions in (0,1) with denominator at most max_den, ordered
// by denominator then numerator.
inline std::vector<Rational> reduced_fractions(long long max_den) {
  std::vector<Rational> out;
  for (long long den = 2; den <= max_den; ++den)
    for (long long num = 1; num < den; ++num)
      if (std::gcd(num, den) == 1) out.emplace_back(num, den);
  return out;
}

struct SweepGrid {
  std::vector<long long> e0_values{-1, -2, -3};
  std::vector<int> n_values{2, 3, 4};
  long long max_den = 12;
};

struct GridCase {
  int8_t e0;
  int8_t n;
  std::array<int16_t, 4> idx;  // indices into reduced_fractions(max_den)
};

// Enumerates coefficient multisets (non-decreasing index tuples) and keeps
// the negative-definite ones, e0 + sum r < 0. The filter runs over a
// common denominator in 64 bits; lcm(1..12) = 27720 keeps it exact.
inline std::vector<GridCase> definite_grid_cases(const SweepGrid& grid) {
  std::vector<Rational> fr = reduced_fractions(grid.max_den);
  long long common = 1;
  for (long long d = 2; d <= grid.max_den; ++d) common = std::lcm(common, d);
  std::vector<long long> scaled(fr.size());
  for (size_t i = 0; i < fr.size(); ++i)
    scaled[i] = fr[i].num_ll() * (common / fr[i].den_ll());

  std::vector<GridCase> out;
  for (long long e0 : grid.e0_values)
    for (int n : grid.n_values) {
      if (n < 1 || n > 4) throw precondition_error("grid supports 1 <= n <= 4");
      std::vector<int> idx(n, 0);
      for (;;) {
        long long sum = 0;
        for (int k = 0; k < n; ++k) sum += scaled[idx[k]];
        if (e0 * common + sum < 0) {
          GridCase c{static_cast<int8_t>(e0), static_cast<int8_t>(n), {0, 0, 0, 0}};
          for (int k = 0; k < n; ++k) c.idx[k] = static_cast<int16_t>(idx[k]);
          out.push_back(c);
        }
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == static_cast<int>(fr.size()) - 1) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int k = pos + 1; k < n; ++k) idx[k] = idx[pos];
      }
    }
  return out;
}

inline SeifertData grid_case_data(const GridCase& c, const std::vector<Rational>& fr) {
  std::vector<Rational> coeffs;
  for (int k = 0; k < c.n; ++k) coeffs.push_back(fr[c.idx[k]]);
  return SeifertData(c.e0, coeffs);
}

struct SweepOutcome {
  long long cases = 0;
  long long cases_e0_minus1 = 0;
  std::vector<std::string> failures;  // in case order
};

namespace detail {

template <typename Fn>
inline void pooled_for(long long count, int jobs, Fn&& body) {
  int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers == 1) {
    for (long long i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      for (long long i = t; i < count; i += workers) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Twisting agreement: the height route and the slope-search route must
// give the same q on every case; for e0 < -1 that q must be 1.
inline SweepOutcome twist_agreement_sweep(const SweepGrid& grid, int jobs = 0,
                                          long long sample_stride = 1) {
  std::vector<Rational> fr = reduced_fractions(grid.max_den);
  std::vector<GridCase> all = definite_grid_cases(grid);
  std::vector<GridCase> cases;
  for (size_t i = 0; i < all.size(); i += static_cast<size_t>(std::max<long long>(1, sample_stride)))
    cases.push_back(all[i]);

  SweepOutcome outcome;
  outcome.cases = static_cast<long long>(cases.size());
  std::vector<std::string> slots(cases.size());
  detail::pooled_for(static_cast<long long>(cases.size()), jobs, [&](long long i) {
    SeifertData s = grid_case_data(cases[i], fr);
    std::string fail;
    try {
      TwistingResult th = twisting_number_height(s);
      TwistingResult tf = twisting_number_farey(s);
      if (th.q != tf.q)
        fail = "height q = " + std::to_string(th.q) + " vs farey q = " + std::to_string(tf.q);
      else if (s.e0 < -1 && th.q != 1)
        fail = "e0 < -1 must give q = 1, got " + std::to_string(th.q);
    } catch (const std::exception& ex) {
      fail = ex.what();
    }
    if (!fail.empty()) slots[i] = seifert_to_text(s) + ": " + fail;
  });
  for (size_t i = 0; i < cases.size(); ++i) {
    if (cases[i].e0 == -1) ++outcome.cases_e0_minus1;
    if (!slots[i].empty()) outcome.failures.push_back(slots[i]);
  }
  return outcome;
}

// Random e0 = -1 presentations; blown_down_presentation validates the
// determinant, rank and definiteness internally, and we re-check the
// determinant match here.
inline SweepOutcome presentation_sweep(uint64_t seed, long long count, long long max_den) {
  std::vector<Rational> fr = reduced_fractions(max_den);
  std::mt19937_64 rng(seed);
  auto pick = [&rng](size_t k) { return static_cast<size_t>(rng() % k); };

  SweepOutcome outcome;
  outcome.cases = count;
  outcome.cases_e0_minus1 = count;
  for (long long i = 0; i < count; ++i) {
    std::vector<Rational> coeffs;
    for (;;) {
      coeffs.clear();
      int n = 2 + static_cast<int>(pick(2));
      Rational sum(0);
      for (int k = 0; k < n; ++k) {
        coeffs.push_back(fr[pick(fr.size())]);
        sum += coeffs.back();
      }
      if (sum < Rational(1)) break;
    }
    SeifertData s(-1, coeffs);
    try {
      SurgeryPresentation pres = blown_down_presentation(s);
      if (abs(pres.det_matrix) != abs(pres.det_q))
        outcome.failures.push_back(seifert_to_text(s) + ": determinant mismatch");
      if (static_cast<int>(pres.matrix.size()) != pres.graph_size - pres.collapsed_size)
        outcome.failures.push_back(seifert_to_text(s) + ": rank mismatch");
    } catch (const std::exception& ex) {
      outcome.failures.push_back(seifert_to_text(s) + ": " + ex.what());
    }
  }
  return outcome;
}

}  // namespace sfs
