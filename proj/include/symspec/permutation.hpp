#pragma once

// Permutations of {1..n} in one-line notation, agreement counts, cycle types
// and the cycle-notation text format.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symspec/exact.hpp"
#include "symspec/partition.hpp"

namespace symspec {

/// Largest degree for which S_n may be enumerated element by element.
inline constexpr int kDefaultEnumerationCap = 10;

/// Calls fn(const Permutation&) for every element of S_n in lexicographic
/// order. The argument is only valid for the duration of the call.
template <class Fn>
void for_each_permutation(int n, Fn&& fn, int cap = kDefaultEnumerationCap);

class Permutation {
 public:
  Permutation() = default;

  /// images[i-1] = sigma(i). Throws unless images is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
      if (v < 1 || v > n || seen[v]) throw InvalidArgument("images are not a bijection of {1..n}");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    if (n < 0) throw InvalidArgument("negative degree");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img), Trusted{});
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i + 1) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
    return Permutation(std::move(inv), Trusted{});
  }

  int fixed_point_count() const {
    int c = 0;
    for (int i = 0; i < degree(); ++i)
      if (images_[i] == i + 1) ++c;
    return c;
  }

  bool fixes(int i) const { return images_[i - 1] == i; }

  /// Cycle lengths, non-increasing.
  std::vector<int> cycle_lengths() const {
    std::vector<int> lens;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = images_[j] - 1) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return lens;
  }

  int sign() const {
    int parity = 0;
    for (int len : cycle_lengths()) parity += len - 1;
    return parity % 2 == 0 ? 1 : -1;
  }

  /// Lexicographic by one-line notation (degree first).
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  struct Trusted {};
  Permutation(std::vector<int> images, Trusted) : images_(std::move(images)) {}

  template <class Fn>
  friend void for_each_permutation(int n, Fn&& fn, int cap);
  friend Permutation compose(const Permutation&, const Permutation&);

  std::vector<int> images_;
};

/// (sigma o tau)(i) = sigma(tau(i)).
inline Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree()) throw InvalidArgument("compose: degree mismatch");
  std::vector<int> img(sigma.images_.size());
  for (int i = 0; i < sigma.degree(); ++i) img[i] = sigma.images_[tau.images_[i] - 1];
  return Permutation(std::move(img), Permutation::Trusted{});
}

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// |{i : sigma(i) = tau(i)}|.
inline int agree_count(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree()) throw InvalidArgument("agree_count: degree mismatch");
  auto a = sigma.images();
  auto b = tau.images();
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += (a[i] == b[i]);
  return c;
}

inline CycleType cycle_type(const Permutation& sigma) {
  return CycleType(Partition(sigma.cycle_lengths()));
}

template <class Fn>
void for_each_permutation(int n, Fn&& fn, int cap) {
  if (n < 0) throw InvalidArgument("negative degree");
  if (n > cap)
    throw CapExceeded("enumeration of S_" + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  Permutation p = Permutation::identity(n);
  do {
    fn(static_cast<const Permutation&>(p));
  } while (std::next_permutation(p.images_.begin(), p.images_.end()));
}

inline std::vector<Permutation> all_permutations(int n, int cap = kDefaultEnumerationCap) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

/// Cycle notation with fixed points omitted; each cycle starts at its least
/// element and cycles are ordered by least element. The identity prints "id".
inline std::string to_cycle_string(const Permutation& sigma) {
  std::string s;
  std::vector<bool> seen(sigma.degree() + 1, false);
  for (int i = 1; i <= sigma.degree(); ++i) {
    if (seen[i] || sigma(i) == i) continue;
    s += '(';
    for (int j = i; !seen[j]; j = sigma(j)) {
      seen[j] = true;
      if (j != i) s += ' ';
      s += std::to_string(j);
    }
    s += ')';
  }
  return s.empty() ? "id" : s;
}

/// Parses "(1 3)(2 4)", "(1,3)" or "id" as a permutation of degree n.
inline Permutation parse_cycles(std::string_view text, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(n + 1, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos, 2) == "id") {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw InvalidArgument("trailing text after 'id'");
    return Permutation(std::move(img));
  }
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw InvalidArgument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      while (pos < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
        ++pos;
      if (pos == text.size()) throw InvalidArgument("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InvalidArgument("unexpected character in cycle notation");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > n) throw InvalidArgument("point " + std::to_string(v) + " out of range");
      if (used[v]) throw InvalidArgument("point " + std::to_string(v) + " repeated");
      used[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation(std::move(img));
}

}  // namespace symspec
