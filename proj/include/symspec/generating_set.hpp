#pragma once

// The generating sets E_{n,t} = {pi in S_n : pi has exactly t-1 fixed points},
// both element-wise and as a union of conjugacy classes.

#include <string>
#include <vector>

#include "symspec/exact.hpp"
#include "symspec/partition.hpp"
#include "symspec/permutation.hpp"

namespace symspec {

inline void check_forbidden_agreement_params(int n, int t) {
  if (n < 2) throw InvalidArgument("generating set needs n >= 2");
  if (t < 1 || t > n)
    throw InvalidArgument("generating set needs 1 <= t <= n (got n=" + std::to_string(n) +
                          ", t=" + std::to_string(t) + ")");
}

/// True when no permutation has exactly t-1 = n-1 fixed points, so E_{n,t}
/// is empty and the graph has no edges.
inline bool is_degenerate_generating_set(int n, int t) { return t == n; }

/// Elements of E_{n,t} in lexicographic order, by enumeration of S_n.
inline std::vector<Permutation> generating_set(int n, int t, int cap = kDefaultEnumerationCap) {
  check_forbidden_agreement_params(n, t);
  std::vector<Permutation> out;
  for_each_permutation(
      n,
      [&](const Permutation& p) {
        if (p.fixed_point_count() == t - 1) out.push_back(p);
      },
      cap);
  return out;
}

/// A conjugation-invariant generating set described by its conjugacy classes.
/// Every class of S_n is inverse-closed, so any union of classes is too.
class GeneratingSet {
 public:
  GeneratingSet(int n, std::vector<CycleType> classes) : n_(n), classes_(std::move(classes)) {
    for (const auto& c : classes_) {
      if (c.degree() != n) throw InvalidArgument("generating class has wrong degree");
      total_ += c.class_size();
    }
  }

  /// Classes with exactly t-1 fixed points (the edges of Gamma_{n,t}).
  static GeneratingSet forbidden_agreement(int n, int t) {
    check_forbidden_agreement_params(n, t);
    std::vector<CycleType> cls;
    for (auto& c : all_cycle_types(n))
      if (c.fixed_points() == t - 1) cls.push_back(c);
    return GeneratingSet(n, std::move(cls));
  }

  int degree() const { return n_; }
  const std::vector<CycleType>& classes() const { return classes_; }
  /// |X|, the valency of the Cayley graph.
  const Integer& total() const { return total_; }

  bool contains(const CycleType& c) const {
    for (const auto& x : classes_)
      if (x == c) return true;
    return false;
  }

 private:
  int n_;
  std::vector<CycleType> classes_;
  Integer total_ = 0;
};

}  // namespace symspec
