#pragma once

// Hoffman bounds for conjugation-invariant weightings of the generating
// classes. A weighting w puts w_c >= 0 on each class c with exactly t-1 fixed
// points, normalised so that the weighted degree sum w_c |c| is 1. The best
// weighting is found by an exact LP: maximise m subject to lambda_alpha(w) >= m
// for every non-trivial alpha.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "symspec/bounds.hpp"
#include "symspec/characters.hpp"
#include "symspec/exact.hpp"
#include "symspec/generating_set.hpp"
#include "symspec/lp.hpp"

namespace symspec {

struct ClassWeighting {
  int n = 0;
  int t = 0;
  std::map<CycleType, Rational> weights;  // w_c, not w_c |c|
};

inline std::vector<CycleType> weighting_classes(int n, int t) {
  return GeneratingSet::forbidden_agreement(n, t).classes();
}

/// Checks support, non-negativity and the normalisation; throws otherwise.
inline void validate(const ClassWeighting& w) {
  check_forbidden_agreement_params(w.n, w.t);
  auto classes = weighting_classes(w.n, w.t);
  Rational total = 0;
  bool some = false;
  for (const auto& [c, v] : w.weights) {
    if (std::find(classes.begin(), classes.end(), c) == classes.end())
      throw InvalidArgument("weight on class " + to_string(c) + " outside the generating set");
    if (v < 0) throw InvalidArgument("weights must be non-negative");
    some = some || v > 0;
    total += v * Rational(c.class_size());
  }
  if (!some) throw InvalidArgument("weights are all zero");
  if (total != 1) throw InvalidArgument("weighted degree must be 1");
}

/// w_c = 1/|X| on every generating class.
inline ClassWeighting uniform_weighting(int n, int t) {
  auto x = GeneratingSet::forbidden_agreement(n, t);
  if (x.total() == 0) throw InvalidArgument("no generating classes: the graph has no edges");
  ClassWeighting w{n, t, {}};
  for (const auto& c : x.classes()) w.weights[c] = Rational(1, x.total());
  return w;
}

/// lambda_alpha(w) = sum_c w_c |c| chi_alpha(c) / f^alpha.
inline Rational weighted_eigenvalue(const Partition& alpha, const ClassWeighting& w) {
  if (alpha.size() != w.n) throw InvalidArgument("partition " + to_string(alpha) + " is not of n");
  auto table = CharacterTable::of(w.n);
  const auto a = table->index_of(alpha);
  Rational s = 0;
  for (const auto& [c, v] : w.weights)
    s += v * Rational(c.class_size() * table->value(a, table->index_of(c.shape())));
  return s / Rational(table->dimension(a));
}

/// Least lambda_alpha(w) over non-trivial alpha.
inline Rational weighted_least_eigenvalue(const ClassWeighting& w) {
  std::optional<Rational> m;
  for (const auto& p : all_partitions(w.n)) {
    if (p.length() == 1) continue;
    auto v = weighted_eigenvalue(p, w);
    if (!m || v < *m) m = v;
  }
  if (!m) throw InvalidArgument("S_1 has no non-trivial representation");
  return *m;
}

/// (-m)/(1-m) * n! for the least eigenvalue m of a normalised weighting.
inline Rational weighted_hoffman_bound(const ClassWeighting& w) {
  validate(w);
  auto m = weighted_least_eigenvalue(w);
  if (m >= 0) throw InvariantViolation("weighted least eigenvalue is not negative");
  return -m / (1 - m) * Rational(factorial(w.n));
}

struct WeightOptResult {
  ClassWeighting weighting;
  Rational least_eigenvalue;  // m
  Rational bound;
  Rational uniform_bound;
  bool certified = false;     // LP duality certificate and re-substitution both hold
  std::size_t pivots = 0;
};

/// Variables: m' = m + 2 and u_c = w_c |c|. Every |lambda_alpha(w)| <= 1, so the
/// optimum has m' >= 1.
/// Rows: m' - sum_c u_c (chi_alpha(c)/f + 2) <= 0 per non-trivial alpha, and
/// sum_c u_c <= 1. With m' > 0 any slack in the last row could be scaled away,
/// so it is tight at the optimum.
inline WeightOptResult optimize_bound(int n, int t) {
  check_forbidden_agreement_params(n, t);
  auto classes = weighting_classes(n, t);
  if (classes.empty()) throw InvalidArgument("no generating classes: the LP is infeasible");
  auto table = CharacterTable::of(n);

  LinearProgram lp;
  const std::size_t k = classes.size();
  lp.c.assign(k + 1, 0);
  lp.c[0] = 1;
  for (std::size_t a = 0; a < table->size(); ++a) {
    if (table->partitions()[a].length() == 1) continue;
    std::vector<Rational> row(k + 1);
    row[0] = 1;
    for (std::size_t j = 0; j < k; ++j) {
      Rational ratio(table->value(a, table->index_of(classes[j].shape())), table->dimension(a));
      row[j + 1] = -(ratio + 2);
    }
    lp.a.push_back(std::move(row));
    lp.b.push_back(0);
  }
  std::vector<Rational> norm(k + 1, 1);
  norm[0] = 0;
  lp.a.push_back(std::move(norm));
  lp.b.push_back(1);

  auto sol = solve_lp(lp);
  WeightOptResult r;
  r.pivots = sol.pivots;
  r.weighting = ClassWeighting{n, t, {}};
  Rational usum = 0;
  for (std::size_t j = 0; j < k; ++j) usum += sol.x[j + 1];
  if (usum == 0) throw InvariantViolation("LP returned the zero weighting");
  for (std::size_t j = 0; j < k; ++j)
    r.weighting.weights[classes[j]] = sol.x[j + 1] / usum / Rational(classes[j].class_size());
  const Rational m = sol.value - 2;

  // Re-substitution: the weighting is valid and its least eigenvalue is m.
  validate(r.weighting);
  r.least_eigenvalue = weighted_least_eigenvalue(r.weighting);
  r.certified = certifies_optimum(lp, sol) && usum == 1 && r.least_eigenvalue == m;
  r.bound = weighted_hoffman_bound(r.weighting);
  r.uniform_bound = weighted_hoffman_bound(uniform_weighting(n, t));
  return r;
}

}  // namespace symspec
