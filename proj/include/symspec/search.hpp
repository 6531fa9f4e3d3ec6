#pragma once

// Maximum independent sets of the forbidden-agreement graphs by a bitset
// branch and bound (maximum clique in the complement, greedy colouring bound).

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "symspec/bounds.hpp"
#include "symspec/exact.hpp"
#include "symspec/family.hpp"
#include "symspec/permutation.hpp"
#include "symspec/spectrum.hpp"

namespace symspec {

inline constexpr int kExactSearchCap = 6;
inline constexpr int kSlowSearchCap = 7;
inline constexpr std::uint64_t kDefaultNodeBudget = 20'000'000;

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// Lowest set index; size() if empty.
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return size_;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  /// this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Graph {
  std::vector<Bitset> adj;
  std::size_t size() const { return adj.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return adj[a].test(b); }
};

/// Vertices are the permutations of degree n in lexicographic order; sigma and
/// tau are adjacent when they agree at exactly t-1 points.
inline Graph forbidden_agreement_graph(const std::vector<Permutation>& perms, int t) {
  Graph g;
  g.adj.assign(perms.size(), Bitset(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = i + 1; j < perms.size(); ++j)
      if (agree_count(perms[i], perms[j]) == t - 1) {
        g.adj[i].set(j);
        g.adj[j].set(i);
      }
  return g;
}

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  bool budget_hit = false;
  bool stopped_at_upper_bound = false;
};

struct IndependentSet {
  std::vector<std::size_t> vertices;  // sorted
  bool exact = false;
  SearchStats stats;
};

namespace detail {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::vector<std::size_t> order, std::size_t floor,
               std::size_t stop_at, std::uint64_t budget)
      : order_(std::move(order)), stop_at_(stop_at), budget_(budget) {
    const std::size_t m = order_.size();
    adj_.assign(m, Bitset(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (g.adjacent(order_[a], order_[b])) adj_[a].set(b);
    best_size_ = floor;
  }

  void run() {
    Bitset p(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) p.set(i);
    std::vector<std::size_t> r;
    if (order_.empty()) return;
    expand(p, r);
  }

  bool stopped() const { return stats_.budget_hit || stats_.stopped_at_upper_bound; }
  const SearchStats& stats() const { return stats_; }
  /// Original vertex ids of the best set found (may be empty if nothing beat
  /// the floor).
  std::vector<std::size_t> best() const {
    std::vector<std::size_t> out;
    for (auto i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::size_t best_size() const { return best_size_; }

 private:
  void record(const std::vector<std::size_t>& r) {
    best_ = r;
    best_size_ = r.size();
    if (best_size_ >= stop_at_) stats_.stopped_at_upper_bound = true;
  }

  void expand(Bitset p, std::vector<std::size_t>& r) {
    if (++stats_.nodes > budget_) {
      stats_.budget_hit = true;
      return;
    }
    // Greedy colouring: each class is pairwise adjacent in the graph, so an
    // independent set takes at most one vertex per class.
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colours;
    Bitset q = p;
    std::size_t k = 0;
    while (q.any()) {
      ++k;
      Bitset qk = q;
      while (qk.any()) {
        std::size_t v = qk.first();
        q.reset(v);
        qk.reset(v);
        qk &= adj_[v];
        verts.push_back(v);
        colours.push_back(k);
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (r.size() + colours[i] <= best_size_) {
        ++stats_.prunes;
        return;
      }
      const std::size_t v = verts[i];
      r.push_back(v);
      Bitset np = p;
      np.subtract(adj_[v]);
      np.reset(v);
      if (np.any())
        expand(np, r);
      else if (r.size() > best_size_)
        record(r);
      r.pop_back();
      if (stopped()) return;
      p.reset(v);
    }
  }

  std::vector<std::size_t> order_;
  std::vector<Bitset> adj_;
  std::vector<std::size_t> best_;
  std::size_t best_size_ = 0;
  std::size_t stop_at_;
  std::uint64_t budget_;
  SearchStats stats_;
};

}  // namespace detail

struct SearchOptions {
  std::optional<std::size_t> forced_vertex;  // always included in the set
  std::size_t upper_bound = SIZE_MAX;        // stop once a set this large is found
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// Maximum independent set of g. Candidate vertices are ordered by
/// non-increasing degree in the complement (ties by vertex id), which fixes the
/// search and hence the returned set.
inline IndependentSet max_independent_set(const Graph& g, const SearchOptions& opt = {}) {
  std::vector<std::size_t> cand;
  Bitset blocked(g.size());
  if (opt.forced_vertex) {
    blocked = g.adj[*opt.forced_vertex];
    blocked.set(*opt.forced_vertex);
  }
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!blocked.test(v)) cand.push_back(v);
  std::vector<std::size_t> deg(g.size(), 0);
  for (auto a : cand)
    for (auto b : cand) deg[a] += (a != b && !g.adjacent(a, b));
  std::stable_sort(cand.begin(), cand.end(),
                   [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });

  const std::size_t base = opt.forced_vertex ? 1 : 0;
  const std::size_t stop_at = opt.upper_bound == SIZE_MAX ? SIZE_MAX : opt.upper_bound - base;
  detail::CliqueSearch s(g, cand, 0, stop_at, opt.node_budget);
  s.run();
  IndependentSet out;
  out.vertices = s.best();
  if (opt.forced_vertex) {
    out.vertices.push_back(*opt.forced_vertex);
    std::sort(out.vertices.begin(), out.vertices.end());
  }
  out.stats = s.stats();
  out.exact = !out.stats.budget_hit;
  return out;
}

struct SearchResult {
  int n = 0;
  int t = 0;
  Integer independence_number;  // best found; exact only when `exact`
  Integer upper_bound;          // floor of the Hoffman bound, or the exact value
  bool exact = false;
  Family witness;
  SearchStats stats;
};

/// floor(hoffman bound) for the graph on S_n, or n! when the graph has no edges.
inline Integer hoffman_floor(int n, int t) {
  auto spec = forbidden_agreement_spectrum(n, t);
  if (spec.degree() == 0) return factorial(n);
  Rational h = hoffman_bound(spec.degree(), spec.lambda_min(), factorial(n));
  return numerator(h) / denominator(h);
}

/// The identity is forced into the set: left translation preserves agreement,
/// so some maximum independent set contains it.
inline SearchResult max_independent_set(int n, int t, bool slow = false,
                                        std::uint64_t node_budget = kDefaultNodeBudget) {
  check_forbidden_agreement_params(n, t);
  const int cap = slow ? kSlowSearchCap : kExactSearchCap;
  if (n > cap)
    throw CapExceeded("exact search is capped at n = " + std::to_string(cap) +
                      (slow ? "" : " (n = 7 needs the slow tier)"));
  const auto perms = all_permutations(n);
  const Graph g = forbidden_agreement_graph(perms, t);
  const Integer floor = hoffman_floor(n, t);
  SearchOptions opt;
  opt.forced_vertex = 0;  // the identity is first in lexicographic order
  opt.upper_bound = floor.convert_to<std::size_t>();
  opt.node_budget = node_budget;
  auto found = max_independent_set(g, opt);

  SearchResult r;
  r.n = n;
  r.t = t;
  r.independence_number = Integer(found.vertices.size());
  r.exact = found.exact;
  r.upper_bound = found.exact ? r.independence_number : floor;
  std::vector<Permutation> members;
  for (auto v : found.vertices) members.push_back(perms[v]);
  r.witness = Family(n, "search witness", std::move(members));
  r.stats = found.stats;
  return r;
}

struct CertificateCheck {
  bool independent = false;
  bool maximal = false;     // no single vertex can be added
  bool size_matches = false;
  bool ok() const { return independent && maximal && size_matches; }
};

/// Is `family` maximal by inclusion as an independent set in the t-graph?
inline bool is_maximal_independent(const Family& family, int t) {
  bool maximal = true;
  for_each_permutation(family.degree(), [&](const Permutation& p) {
    if (!maximal || family.contains(p)) return;
    bool blocked = false;
    for (const auto& m : family.members())
      if (agree_count(p, m) == t - 1) {
        blocked = true;
        break;
      }
    if (!blocked) maximal = false;
  });
  return maximal;
}

inline CertificateCheck verify_certificate(const SearchResult& r) {
  CertificateCheck c;
  c.independent = r.witness.degree() == r.n && verify(r.witness, Predicate::independent_in(r.t)).holds;
  c.maximal = c.independent && is_maximal_independent(r.witness, r.t);
  c.size_matches = Integer(r.witness.size()) == r.independence_number;
  return c;
}

}  // namespace symspec
