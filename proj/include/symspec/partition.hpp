#pragma once

// Integer partitions: Young diagram shapes, cycle types, dimensions f^alpha
// and the k-fat / k-tall / k-medium trichotomy.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symspec/exact.hpp"

namespace symspec {

/// A non-increasing sequence of positive integers. The empty partition is the
/// unique partition of 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw InvalidArgument("partition parts must be non-increasing");
    }
  }

  /// Drops zero entries and sorts; rejects negative entries.
  static Partition from_unsorted(std::vector<int> entries) {
    if (std::any_of(entries.begin(), entries.end(), [](int v) { return v < 0; }))
      throw InvalidArgument("negative entry in composition");
    std::erase(entries, 0);
    std::sort(entries.begin(), entries.end(), std::greater<>());
    return Partition(std::move(entries));
  }

  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int first_row() const { return parts_.empty() ? 0 : parts_.front(); }
  int first_column() const { return length(); }

  /// Number of parts equal to k.
  int multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Canonical order is reverse-lexicographic: (3) before (2,1) before (1,1,1).
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

inline Partition transpose(const Partition& alpha) {
  std::vector<int> cols;
  for (int i = 1; i <= alpha.first_row(); ++i) {
    int h = 0;
    for (int p : alpha.parts())
      if (p >= i) ++h;
    cols.push_back(h);
  }
  return Partition(std::move(cols));
}

/// All partitions of n in canonical (reverse-lexicographic) order.
inline std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw InvalidArgument("all_partitions: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline std::string to_string(const Partition& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(alpha.parts()[i]);
  }
  return s;
}

/// Parses "3,2,2", "3,2^2" or "(3,2,2)". Exponent shorthand p^m repeats p m times.
inline Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '(')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == ')')) v.remove_suffix(1);
    return v;
  };
  auto to_int = [&](std::string_view v) {
    v = trim(v);
    int x = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
      throw InvalidArgument("bad partition token '" + std::string(v) + "'");
    return x;
  };
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    std::size_t caret = token.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(to_int(token));
    } else {
      int part = to_int(token.substr(0, caret));
      int reps = to_int(token.substr(caret + 1));
      if (reps < 0) throw InvalidArgument("negative exponent in partition");
      parts.insert(parts.end(), reps, part);
    }
    start = end + 1;
  }
  return Partition(std::move(parts));
}

/// Multinomial n! / prod(row!) -- the number of tabloids of a composition.
inline Integer multinomial(std::span<const int> rows) {
  int n = 0;
  Integer denom = 1;
  for (int r : rows) {
    n += r;
    denom *= factorial(r);
  }
  return factorial(n) / denom;
}

/// f^alpha, computed by evaluating the determinantal formula at the identity:
/// sum over pi in S_l of sgn(pi) * multinomial(alpha - id + pi).
inline Integer dimension(const Partition& alpha) {
  const int l = alpha.length();
  std::vector<int> entries(l);
  std::vector<bool> used(l + 1, false);
  Integer total = 0;
  std::function<void(int, int)> rec = [&](int row, int inversions) {
    if (row == l) {
      Integer term = multinomial(entries);
      total += (inversions % 2 == 0) ? term : Integer(-term);
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
  return total;
}

enum class Fatness { Fat, Tall, Medium };

inline std::string to_string(Fatness f) {
  switch (f) {
    case Fatness::Fat: return "fat";
    case Fatness::Tall: return "tall";
    case Fatness::Medium: return "medium";
  }
  return "?";
}

/// k-fat if the first row has length >= n-k, else k-tall if the first column
/// has height >= n-k, else k-medium. Fat wins when both apply (only possible
/// for k >= n/2 - 1).
inline Fatness classify(const Partition& alpha, int k) {
  const int n = alpha.size();
  if (k < 0 || k >= n) throw InvalidArgument("classify: need 0 <= k < n");
  if (alpha.first_row() >= n - k) return Fatness::Fat;
  if (alpha.first_column() >= n - k) return Fatness::Tall;
  return Fatness::Medium;
}

/// A conjugacy class of S_n, labelled by its multiset of cycle lengths.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(Partition shape) : shape_(std::move(shape)) {}

  const Partition& shape() const { return shape_; }
  int degree() const { return shape_.size(); }
  int fixed_points() const { return shape_.multiplicity(1); }

  /// Sign of any permutation in the class: (-1)^(n - number of cycles).
  int sign() const { return ((degree() - shape_.length()) % 2 == 0) ? 1 : -1; }

  /// Order of the centralizer: prod over k of k^{m_k} m_k!.
  Integer centralizer_order() const {
    Integer z = 1;
    for (int k = 1; k <= degree(); ++k) {
      int m = shape_.multiplicity(k);
      for (int i = 0; i < m; ++i) z *= k;
      z *= factorial(m);
    }
    return z;
  }

  Integer class_size() const { return factorial(degree()) / centralizer_order(); }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  Partition shape_;
};

inline std::string to_string(const CycleType& c) { return to_string(c.shape()); }

inline std::vector<CycleType> all_cycle_types(int n) {
  std::vector<CycleType> out;
  for (auto& p : all_partitions(n)) out.emplace_back(p);
  return out;
}

}  // namespace symspec
