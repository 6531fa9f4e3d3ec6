#pragma once

// A labelled set of permutations of one degree, with pairwise predicates that
// report the lexicographically smallest violating pair.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symspec/exact.hpp"
#include "symspec/permutation.hpp"

namespace symspec {

inline constexpr std::size_t kPairwiseCap = 20000;

class Family {
 public:
  Family() = default;
  Family(int n, std::string label, std::vector<Permutation> members)
      : n_(n), label_(std::move(label)), members_(std::move(members)) {
    if (n < 0) throw InvalidArgument("family degree must be non-negative");
    for (const auto& m : members_)
      if (m.degree() != n) throw InvalidArgument("family member has the wrong degree");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  int degree() const { return n_; }
  const std::string& label() const { return label_; }
  const std::vector<Permutation>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Permutation& p) const {
    return std::binary_search(members_.begin(), members_.end(), p);
  }

  /// One permutation per line in cycle notation.
  std::string to_text() const {
    std::string s;
    for (const auto& m : members_) s += to_cycle_string(m) + '\n';
    return s;
  }

 private:
  int n_ = 0;
  std::string label_;
  std::vector<Permutation> members_;
};

inline Family intersection(const Family& a, const Family& b, std::string label) {
  if (a.degree() != b.degree()) throw InvalidArgument("intersection: degree mismatch");
  std::vector<Permutation> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return Family(a.degree(), std::move(label), std::move(out));
}

inline Family set_union(const Family& a, const Family& b, std::string label) {
  if (a.degree() != b.degree()) throw InvalidArgument("union: degree mismatch");
  std::vector<Permutation> out;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                 std::back_inserter(out));
  return Family(a.degree(), std::move(label), std::move(out));
}

inline Family difference(const Family& a, const Family& b, std::string label) {
  if (a.degree() != b.degree()) throw InvalidArgument("difference: degree mismatch");
  std::vector<Permutation> out;
  std::set_difference(a.members().begin(), a.members().end(), b.members().begin(),
                      b.members().end(), std::back_inserter(out));
  return Family(a.degree(), std::move(label), std::move(out));
}

enum class PredicateKind {
  NoSingletonIntersection,  // no two members agree on exactly one point
  TIntersecting,            // every two distinct members agree on >= t points
  IndependentIn,            // no two members agree on exactly t-1 points
  CrossIndependent,         // no sigma in A, tau in B agree on exactly t-1 points
  FirstPointSplit,          // sigma(1)=tau(1) => agree != 2, else agree != 1
  FirstTwoPointsSplit,      // one of sigma(1)=tau(1), sigma(2)=tau(2) => agree != 2;
                            // both => agree != 3; neither => agree != 1
};

struct Predicate {
  PredicateKind kind;
  int t = 2;

  static Predicate no_singleton_intersection() { return {PredicateKind::NoSingletonIntersection, 2}; }
  static Predicate t_intersecting(int t) { return {PredicateKind::TIntersecting, t}; }
  static Predicate independent_in(int t) { return {PredicateKind::IndependentIn, t}; }
  static Predicate cross_independent(int t) { return {PredicateKind::CrossIndependent, t}; }
  static Predicate first_point_split() { return {PredicateKind::FirstPointSplit, 2}; }
  static Predicate first_two_points_split() { return {PredicateKind::FirstTwoPointsSplit, 2}; }

  bool is_cross() const {
    return kind == PredicateKind::CrossIndependent || kind == PredicateKind::FirstPointSplit ||
           kind == PredicateKind::FirstTwoPointsSplit;
  }

  /// True when the pair (sigma, tau) satisfies the predicate.
  bool admits(const Permutation& s, const Permutation& u) const {
    const int k = agree_count(s, u);
    switch (kind) {
      case PredicateKind::NoSingletonIntersection: return k != 1;
      case PredicateKind::TIntersecting: return k >= t;
      case PredicateKind::IndependentIn:
      case PredicateKind::CrossIndependent: return k != t - 1;
      case PredicateKind::FirstPointSplit: return s(1) == u(1) ? k != 2 : k != 1;
      case PredicateKind::FirstTwoPointsSplit: {
        const int same = (s(1) == u(1)) + (s(2) == u(2));
        if (same == 1) return k != 2;
        if (same == 2) return k != 3;
        return k != 1;
      }
    }
    return false;
  }
};

inline std::string to_string(const Predicate& p) {
  switch (p.kind) {
    case PredicateKind::NoSingletonIntersection: return "no-singleton-intersection";
    case PredicateKind::TIntersecting: return "t-intersecting(" + std::to_string(p.t) + ")";
    case PredicateKind::IndependentIn: return "independent-in(t=" + std::to_string(p.t) + ")";
    case PredicateKind::CrossIndependent: return "cross-independent(t=" + std::to_string(p.t) + ")";
    case PredicateKind::FirstPointSplit: return "first-point-split";
    case PredicateKind::FirstTwoPointsSplit: return "first-two-points-split";
  }
  return "?";
}

struct Verification {
  bool holds = true;
  std::optional<std::pair<Permutation, Permutation>> witness;
};

/// Checks a predicate over all pairs of distinct members. Members are sorted,
/// so the first violation in (i, j) order is the lexicographically least pair.
inline Verification verify(const Family& a, const Predicate& p, std::size_t cap = kPairwiseCap) {
  if (p.is_cross()) throw InvalidArgument("cross predicate needs two families");
  if (a.size() > cap) throw CapExceeded("family too large for pairwise verification");
  const auto& m = a.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!p.admits(m[i], m[j])) return {false, std::make_pair(m[i], m[j])};
  return {};
}

/// Checks a predicate over every (sigma, tau) in A x B, sigma = tau included.
inline Verification verify(const Family& a, const Family& b, const Predicate& p,
                           std::size_t cap = kPairwiseCap) {
  if (a.degree() != b.degree()) throw InvalidArgument("verify: degree mismatch");
  if (a.size() > cap || b.size() > cap)
    throw CapExceeded("family too large for pairwise verification");
  for (const auto& s : a.members())
    for (const auto& u : b.members())
      if (!p.admits(s, u)) return {false, std::make_pair(s, u)};
  return {};
}

}  // namespace symspec
