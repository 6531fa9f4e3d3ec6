#pragma once

// Named permutation families: t-cosets, the Hilton-Milner type families, the
// extremal family B with its case families F_j and G_j, and the auxiliary
// families H and M used when bounding independent sets that avoid a coset.
//
// "Fixed points >= k" always means fixed points i with i >= k.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symspec/derangements.hpp"
#include "symspec/exact.hpp"
#include "symspec/family.hpp"
#include "symspec/permutation.hpp"
#include "symspec/random.hpp"

namespace symspec {

inline constexpr int kFamilyMinN = 7;

/// Calls fn on every sigma of degree n with sigma(i) = j for each (i, j).
/// The free part has (n - pairs.size())! elements, capped by `cap`.
template <class Fn>
void for_each_in_coset(int n, const std::vector<std::pair<int, int>>& pairs, Fn&& fn,
                       int cap = kDefaultEnumerationCap) {
  if (static_cast<int>(pairs.size()) > n) throw InvalidArgument("coset fixes more than n points");
  std::vector<int> img(n, 0);
  std::vector<bool> used(n + 1, false);
  for (auto [i, j] : pairs) {
    if (i < 1 || i > n || j < 1 || j > n) throw InvalidArgument("coset pair out of range");
    if (img[i - 1] != 0) throw InvalidArgument("repeated domain point in coset pairs");
    if (used[j]) throw InvalidArgument("repeated image point in coset pairs");
    img[i - 1] = j;
    used[j] = true;
  }
  std::vector<int> free_dom, free_img;
  for (int i = 1; i <= n; ++i) {
    if (img[i - 1] == 0) free_dom.push_back(i);
    if (!used[i]) free_img.push_back(i);
  }
  const int k = static_cast<int>(free_dom.size());
  for_each_permutation(
      k,
      [&](const Permutation& p) {
        for (int a = 0; a < k; ++a) img[free_dom[a] - 1] = free_img[p(a + 1) - 1];
        fn(Permutation(img));
      },
      cap);
}

inline Family t_coset(const std::vector<std::pair<int, int>>& pairs, int n) {
  std::vector<Permutation> m;
  for_each_in_coset(n, pairs, [&](const Permutation& p) { m.push_back(p); });
  std::string label = "coset";
  for (auto [i, j] : pairs) label += " " + std::to_string(i) + "->" + std::to_string(j);
  return Family(n, std::move(label), std::move(m));
}

/// A uniformly random 2-coset (distinct points i1, i2 mapped to distinct
/// images j1, j2), then each member kept with probability 1/2. Subsets of
/// 2-cosets are independent in the t = 2 graph for every n.
inline Family random_two_coset_subset(std::mt19937_64& rng, int n) {
  if (n < 2) throw InvalidArgument("random_two_coset_subset needs n >= 2");
  const int i1 = 1 + static_cast<int>(draw_below(rng, n));
  int i2 = 1 + static_cast<int>(draw_below(rng, n - 1));
  if (i2 >= i1) ++i2;
  const int j1 = 1 + static_cast<int>(draw_below(rng, n));
  int j2 = 1 + static_cast<int>(draw_below(rng, n - 1));
  if (j2 >= j1) ++j2;
  std::vector<Permutation> m;
  for_each_in_coset(n, {{i1, j1}, {i2, j2}}, [&](const Permutation& p) {
    if (draw_below(rng, 2) == 1) m.push_back(p);
  });
  return Family(n, "random 2-coset subset", std::move(m));
}

/// Number of fixed points i >= from.
inline int fixed_points_from(const Permutation& s, int from) {
  int c = 0;
  for (int i = std::max(from, 1); i <= s.degree(); ++i) c += s.fixes(i);
  return c;
}

namespace detail {

inline void require_family_n(int n) {
  if (n < kFamilyMinN)
    throw InvalidArgument("family needs n >= " + std::to_string(kFamilyMinN));
}

template <class Pred>
Family filter_fixing_12(int n, std::string label, Pred pred) {
  std::vector<Permutation> m;
  for_each_in_coset(n, {{1, 1}, {2, 2}}, [&](const Permutation& p) {
    if (pred(p)) m.push_back(p);
  });
  return Family(n, std::move(label), std::move(m));
}

}  // namespace detail

/// The extra members of B: permutations of {1,2,3,4} (fixing 5..n) mapping
/// {1,2} onto {3,4}, found by scanning S_4.
inline std::vector<Permutation> b_tail(int n) {
  if (n < 4) throw InvalidArgument("b_tail needs n >= 4");
  std::vector<Permutation> out;
  for_each_permutation(4, [&](const Permutation& p) {
    auto lo = [](int v) { return v == 3 || v == 4; };
    if (lo(p(1)) && lo(p(2))) {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 1);
      for (int i = 1; i <= 4; ++i) img[i - 1] = p(i);
      out.emplace_back(std::move(img));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// The two printed versions of the tail, kept for comparison against b_tail.
inline std::vector<std::string> b_tail_statement_listing() {
  return {"(1 3)(2 4)", "(1 4)(2 3)", "(1 3 2 4)", "(1 4 2 3)"};
}
inline std::vector<std::string> b_tail_proof_listing() {
  return {"(1 3)(2 4)", "(1 4)(2 3)", "(1 3 2 4)", "(1 4 3 2)"};
}

inline Family family_B(int n) {
  detail::require_family_n(n);
  Family core = detail::filter_fixing_12(
      n, "B", [](const Permutation& p) { return fixed_points_from(p, 5) != 1; });
  auto m = core.members();
  for (auto& p : b_tail(n)) m.push_back(std::move(p));
  return Family(n, "B", std::move(m));
}

inline Integer family_B_size_formula(int n) {
  detail::require_family_n(n);
  return factorial(n - 2) -
         (n - 4) * (derangement(n - 3) + 2 * derangement(n - 4) + derangement(n - 5)) + 4;
}

namespace detail {

inline void require_case_index(int j) {
  if (j < 1 || j > 4) throw InvalidArgument("case family index must be in 1..4");
}

inline bool in_case_family(int j, const Permutation& p) {
  switch (j) {
    case 1: return fixed_points_from(p, 3) == 1;
    case 2: return fixed_points_from(p, 4) == 0;
    case 3: return fixed_points_from(p, 4) == 1;
    default: return fixed_points_from(p, 5) == 1;
  }
}

}  // namespace detail

/// F_j, a subset of the coset fixing 1 and 2.
inline Family family_F(int j, int n) {
  detail::require_case_index(j);
  detail::require_family_n(n);
  return detail::filter_fixing_12(n, "F" + std::to_string(j),
                                  [j](const Permutation& p) { return detail::in_case_family(j, p); });
}

/// G_j = {sigma : sigma(1)=1, sigma(2)=2} \ F_j.
inline Family family_G(int j, int n) {
  detail::require_case_index(j);
  detail::require_family_n(n);
  return detail::filter_fixing_12(n, "G" + std::to_string(j), [j](const Permutation& p) {
    return !detail::in_case_family(j, p);
  });
}

inline Integer family_F_size_formula(int j, int n) {
  detail::require_case_index(j);
  detail::require_family_n(n);
  auto d = [](int k) { return derangement(k); };
  switch (j) {
    case 1: return (n - 2) * d(n - 3);
    case 2: return d(n - 2) + d(n - 3);
    case 3: return (n - 3) * (d(n - 3) + d(n - 4));
    default: return (n - 4) * (d(n - 3) + 2 * d(n - 4) + d(n - 5));
  }
}

inline Integer family_G_size_formula(int j, int n) {
  return factorial(n - 2) - family_F_size_formula(j, n);
}

/// |F_j| by enumeration without storing members (usable up to n = 12).
inline Integer count_family_F(int j, int n) {
  detail::require_case_index(j);
  detail::require_family_n(n);
  Integer c = 0;
  for_each_in_coset(n, {{1, 1}, {2, 2}}, [&](const Permutation& p) {
    if (detail::in_case_family(j, p)) c += 1;
  });
  return c;
}

/// |B| by enumeration without storing members.
inline Integer count_family_B(int n) {
  detail::require_family_n(n);
  Integer c = static_cast<long>(b_tail(n).size());
  for_each_in_coset(n, {{1, 1}, {2, 2}}, [&](const Permutation& p) {
    if (fixed_points_from(p, 5) != 1) c += 1;
  });
  return c;
}

/// sigma(i) = i for all i <= t and sigma(j) = j for some j > t+1, together with
/// the transpositions (i t+1), i <= t.
inline Family hm_families(int n, int t) {
  if (t < 1 || n < t + 2) throw InvalidArgument("hm_families needs 1 <= t and n >= t + 2");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= t; ++i) pairs.emplace_back(i, i);
  std::vector<Permutation> m;
  for_each_in_coset(n, pairs, [&](const Permutation& p) {
    if (fixed_points_from(p, t + 2) > 0) m.push_back(p);
  });
  for (int i = 1; i <= t; ++i) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::swap(img[i - 1], img[t]);
    m.emplace_back(std::move(img));
  }
  return Family(n, "HM(t=" + std::to_string(t) + ")", std::move(m));
}

/// N(pi) = {i >= 5 : pi(i) != i}.
inline std::vector<int> moved_from_five(const Permutation& pi) {
  std::vector<int> out;
  for (int i = 5; i <= pi.degree(); ++i)
    if (!pi.fixes(i)) out.push_back(i);
  return out;
}

/// F(rho) = {i >= 5 : rho(i) = i}.
inline std::vector<int> fixed_from_five(const Permutation& rho) {
  std::vector<int> out;
  for (int i = 5; i <= rho.degree(); ++i)
    if (rho.fixes(i)) out.push_back(i);
  return out;
}

/// Members fix 1 and 2, fix at least two points of N(pi), and agree with pi
/// at exactly one point.
inline Family family_H(const Permutation& pi, int n) {
  detail::require_family_n(n);
  if (pi.degree() != n) throw InvalidArgument("family_H: degree mismatch");
  const auto moved = moved_from_five(pi);
  return detail::filter_fixing_12(n, "H", [&](const Permutation& s) {
    int fixed = 0;
    for (int i : moved) fixed += s.fixes(i);
    return fixed >= 2 && agree_count(s, pi) == 1;
  });
}

/// C(|N(pi)|, 2) d_{n-4}: the count guaranteed when pi fixes 1 or 2.
inline Integer family_H_lower_bound(const Permutation& pi) {
  const int k = static_cast<int>(moved_from_five(pi).size());
  return binomial(k, 2) * derangement(pi.degree() - 4);
}

/// Members fix 1, 2 and 5, and agree with rho at exactly one point j >= 3,
/// that point lying in F(rho).
inline Family family_M(const Permutation& rho, int n) {
  detail::require_family_n(n);
  if (rho.degree() != n) throw InvalidArgument("family_M: degree mismatch");
  const auto fixed = fixed_from_five(rho);
  std::vector<Permutation> m;
  for_each_in_coset(n, {{1, 1}, {2, 2}, {5, 5}}, [&](const Permutation& s) {
    int hits = 0;
    int where = 0;
    for (int j = 3; j <= n; ++j)
      if (s(j) == rho(j)) {
        ++hits;
        where = j;
      }
    if (hits == 1 && std::find(fixed.begin(), fixed.end(), where) != fixed.end())
      m.push_back(s);
  });
  return Family(n, "M", std::move(m));
}

inline Integer family_M_lower_bound(const Permutation& rho) {
  return Integer(fixed_from_five(rho).size()) * derangement(rho.degree() - 4);
}

/// #{sigma : sigma(1)=1, sigma(2)=2, |sigma cap tau| = 1}.
inline Integer count_agreeing_exactly_once(const Permutation& tau, int n) {
  if (tau.degree() != n) throw InvalidArgument("count_agreeing_exactly_once: degree mismatch");
  if (n < 2 || n > 10) throw CapExceeded("count_agreeing_exactly_once needs 2 <= n <= 10");
  Integer c = 0;
  for_each_in_coset(n, {{1, 1}, {2, 2}}, [&](const Permutation& s) {
    if (agree_count(s, tau) == 1) c += 1;
  });
  return c;
}

/// #{sigma in S_n : sigma has at least k fixed points}, by enumeration.
inline Integer count_with_fixed_points_at_least(int n, int k, int cap = kDefaultEnumerationCap) {
  Integer c = 0;
  for_each_permutation(n, [&](const Permutation& p) {
    if (p.fixed_point_count() >= k) c += 1;
  }, cap);
  return c;
}

/// True when some two distinct points i, k are mapped to the same images by
/// every member (the family lies inside one 2-coset).
inline bool contained_in_two_coset(const Family& f) {
  if (f.empty()) return true;
  int constant = 0;
  const auto& first = f.members().front();
  for (int i = 1; i <= f.degree(); ++i) {
    bool same = true;
    for (const auto& p : f.members())
      if (p(i) != first(i)) {
        same = false;
        break;
      }
    constant += same;
  }
  return constant >= 2;
}

}  // namespace symspec
