#pragma once

// Characters of S_n: permutation characters xi_alpha (fixed tabloids),
// irreducible characters chi_alpha via the determinantal formula, and an
// independent Murnaghan-Nakayama evaluator.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symspec/exact.hpp"
#include "symspec/partition.hpp"

namespace symspec {

namespace detail {

inline void check_same_degree(const Partition& alpha, const CycleType& c) {
  if (alpha.size() != c.degree())
    throw InvalidArgument("partition " + to_string(alpha) + " and class " + to_string(c) +
                          " have different n");
}

// Ways to place each cycle wholly inside one row so that row i receives
// exactly rows[i] points. Cycles are distinguishable.
inline Integer count_cycle_placements(std::span<const int> cycles, std::vector<int> rows) {
  std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
  std::function<Integer(std::size_t, std::vector<int>&)> rec = [&](std::size_t idx,
                                                                   std::vector<int>& cap) {
    if (idx == cycles.size()) return Integer(1);
    auto key = std::make_pair(idx, cap);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer ways = 0;
    for (auto& slot : cap) {
      if (slot < cycles[idx]) continue;
      slot -= cycles[idx];
      ways += rec(idx + 1, cap);
      slot += cycles[idx];
    }
    memo.emplace(std::move(key), ways);
    return ways;
  };
  return rec(0, rows);
}

// Calls fn(sign, composition) for every pi in S_l whose shifted sequence
// alpha - id + pi has no negative entry.
template <class Fn>
void for_each_determinantal_term(const Partition& alpha, Fn&& fn) {
  const int l = alpha.length();
  std::vector<int> entries(l);
  std::vector<bool> used(l + 1, false);
  std::function<void(int, int)> rec = [&](int row, int inversions) {
    if (row == l) {
      fn(inversions % 2 == 0 ? 1 : -1, static_cast<const std::vector<int>&>(entries));
      return;
    }
    for (int v = 1; v <= l; ++v) {
      if (used[v]) continue;
      int e = alpha[row] - (row + 1) + v;
      if (e < 0) continue;
      int inv = 0;
      for (int w = v + 1; w <= l; ++w)
        if (used[w]) ++inv;
      used[v] = true;
      entries[row] = e;
      rec(row + 1, inversions + inv);
      used[v] = false;
    }
  };
  rec(0, 0);
}

}  // namespace detail

/// xi_alpha(c): the number of alpha-tabloids fixed by a permutation of cycle
/// type c. A tabloid is fixed iff every cycle lies inside a single row.
inline Integer permutation_character(const Partition& alpha, const CycleType& c) {
  detail::check_same_degree(alpha, c);
  std::vector<int> rows(alpha.parts().begin(), alpha.parts().end());
  return detail::count_cycle_placements(c.shape().parts(), std::move(rows));
}

/// chi_alpha(c) = sum_{pi in S_l} sgn(pi) xi_{alpha - id + pi}(c); terms with
/// a negative entry vanish, the rest are evaluated on the reordered partition.
inline Integer irreducible_character(const Partition& alpha, const CycleType& c) {
  detail::check_same_degree(alpha, c);
  std::map<Partition, Integer> xi;
  Integer total = 0;
  detail::for_each_determinantal_term(alpha, [&](int sgn, const std::vector<int>& entries) {
    Partition beta = Partition::from_unsorted(entries);
    auto it = xi.find(beta);
    if (it == xi.end()) it = xi.emplace(beta, permutation_character(beta, c)).first;
    total += sgn > 0 ? it->second : Integer(-it->second);
  });
  return total;
}

namespace detail {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves one
// bead from position b to b - r; the sign is (-1)^(beads strictly between).
inline Integer mn_recursive(const std::vector<int>& beads, std::span<const int> cycles,
                            std::map<std::pair<std::vector<int>, std::vector<int>>, Integer>& memo) {
  if (cycles.empty()) return 1;
  auto key = std::make_pair(beads, std::vector<int>(cycles.begin(), cycles.end()));
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = cycles.front();
  Integer total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    int b = beads[i];
    int target = b - r;
    if (target < 0) continue;
    bool occupied = false;
    int between = 0;
    for (int other : beads) {
      if (other == target) occupied = true;
      if (other > target && other < b) ++between;
    }
    if (occupied) continue;
    std::vector<int> next = beads;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    Integer sub = mn_recursive(next, cycles.subspan(1), memo);
    total += (between % 2 == 0) ? sub : Integer(-sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// chi_alpha(c) by recursive border-strip removal. Shares no code with the
/// determinantal route.
inline Integer mn_character(const Partition& alpha, const CycleType& c) {
  detail::check_same_degree(alpha, c);
  static std::mutex mu;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo;
  const int l = alpha.length();
  std::vector<int> beads(l);
  for (int i = 0; i < l; ++i) beads[i] = alpha[i] + (l - 1 - i);
  std::lock_guard lock(mu);
  return detail::mn_recursive(beads, c.shape().parts(), memo);
}

/// The full character table of S_n computed with the determinantal formula.
/// Rows and columns are both in canonical partition order.
class CharacterTable {
 public:
  explicit CharacterTable(int n) : n_(n), partitions_(all_partitions(n)) {
    if (n < 1) throw InvalidArgument("character table needs n >= 1");
    for (const auto& p : partitions_) classes_.emplace_back(p);
    for (std::size_t i = 0; i < partitions_.size(); ++i) index_.emplace(partitions_[i], i);

    const std::size_t k = partitions_.size();
    std::vector<std::vector<Integer>> xi(k, std::vector<Integer>(k));
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) xi[b][c] = permutation_character(partitions_[b], classes_[c]);

    values_.assign(k, std::vector<Integer>(k, 0));
    for (std::size_t a = 0; a < k; ++a) {
      std::map<std::size_t, int> coeff;
      detail::for_each_determinantal_term(partitions_[a], [&](int sgn, const std::vector<int>& e) {
        coeff[index_.at(Partition::from_unsorted(e))] += sgn;
      });
      for (std::size_t c = 0; c < k; ++c)
        for (auto [b, m] : coeff) values_[a][c] += m * xi[b][c];
    }
  }

  /// Shared, lazily built table for S_n. Values are constants, so entries are
  /// never invalidated; concurrent first calls may both compute.
  static std::shared_ptr<const CharacterTable> of(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CharacterTable>> cache;
    {
      std::lock_guard lock(mu);
      if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto table = std::make_shared<const CharacterTable>(n);
    std::lock_guard lock(mu);
    return cache.emplace(n, table).first->second;
  }

  int degree() const { return n_; }
  std::size_t size() const { return partitions_.size(); }
  const std::vector<Partition>& partitions() const { return partitions_; }
  const std::vector<CycleType>& classes() const { return classes_; }

  std::size_t index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw InvalidArgument("partition " + to_string(p) + " is not of n");
    return it->second;
  }

  const Integer& value(std::size_t alpha, std::size_t cls) const { return values_[alpha][cls]; }
  const Integer& value(const Partition& alpha, const CycleType& c) const {
    return values_[index_of(alpha)][index_of(c.shape())];
  }

  /// f^alpha = chi_alpha(identity); the identity class (1^n) is last.
  const Integer& dimension(std::size_t alpha) const { return values_[alpha].back(); }
  const Integer& dimension(const Partition& alpha) const { return dimension(index_of(alpha)); }

  /// Rows = partitions, columns = cycle types, both canonical. Labels that
  /// contain commas are quoted.
  std::string to_csv() const {
    std::ostringstream os;
    os << "partition";
    for (const auto& c : classes_) os << ",\"" << to_string(c) << '"';
    os << '\n';
    for (std::size_t a = 0; a < size(); ++a) {
      os << '"' << to_string(partitions_[a]) << '"';
      for (std::size_t c = 0; c < size(); ++c) os << ',' << values_[a][c];
      os << '\n';
    }
    return os.str();
  }

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::vector<CycleType> classes_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::vector<Integer>> values_;
};

/// chi_{alpha^t}(c) == sgn(c) chi_alpha(c).
inline bool sign_twist_check(const Partition& alpha, const CycleType& c) {
  detail::check_same_degree(alpha, c);
  auto table = CharacterTable::of(alpha.size());
  return table->value(transpose(alpha), c) == c.sign() * table->value(alpha, c);
}

}  // namespace symspec
