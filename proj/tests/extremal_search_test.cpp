#include <gtest/gtest.h>

#include <cstdint>
#include <iostream>
#include <random>

#include "symspec/families.hpp"
#include "symspec/search.hpp"
#include "test_support.hpp"

namespace symspec {
namespace {

// Adjacency masks of the t-graph on S_n for n <= 4 (at most 24 vertices).
std::vector<std::uint32_t> small_masks(int n, int t) {
  auto perms = all_permutations(n);
  std::vector<std::uint32_t> m(perms.size(), 0);
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j)
      if (i != j && agree_count(perms[i], perms[j]) == t - 1) m[i] |= 1u << j;
  return m;
}

// Every subset, checked directly.
int independence_by_subsets(const std::vector<std::uint32_t>& adj) {
  const std::uint32_t v = static_cast<std::uint32_t>(adj.size());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << v); ++s) {
    bool ok = true;
    for (std::uint32_t i = 0; i < v && ok; ++i)
      if ((s >> i & 1) && (adj[i] & s)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

// Include/exclude recursion over every independent set, no bounding.
int independence_by_recursion(const std::vector<std::uint32_t>& adj, std::size_t i,
                              std::uint32_t chosen) {
  if (i == adj.size()) return std::popcount(chosen);
  int skip = independence_by_recursion(adj, i + 1, chosen);
  if (adj[i] & chosen) return skip;
  return std::max(skip, independence_by_recursion(adj, i + 1, chosen | (1u << i)));
}

TEST(Search, ThreeTwoIsThree) {
  auto r = max_independent_set(3, 2);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.independence_number, 3);
  EXPECT_EQ(independence_by_subsets(small_masks(3, 2)), 3);
  EXPECT_GT(r.independence_number, factorial(1));
  EXPECT_TRUE(verify_certificate(r).ok());
}

TEST(Search, MatchesExhaustiveAtThreeAndFour) {
  for (int n : {3, 4})
    for (int t : {2, 3}) {
      auto r = max_independent_set(n, t);
      ASSERT_TRUE(r.exact);
      EXPECT_EQ(r.independence_number, independence_by_recursion(small_masks(n, t), 0, 0))
          << n << " " << t;
      EXPECT_TRUE(verify_certificate(r).ok());
    }
  EXPECT_EQ(max_independent_set(4, 2).independence_number, 8);
  EXPECT_EQ(max_independent_set(4, 3).independence_number, 12);
}

TEST(Search, FiveAndSix) {
  auto r52 = max_independent_set(5, 2);
  EXPECT_EQ(r52.independence_number, 13);
  EXPECT_EQ(max_independent_set(5, 3).independence_number, 20);
  auto r62 = max_independent_set(6, 2);
  ASSERT_TRUE(r62.exact);
  EXPECT_EQ(r62.independence_number, 48);
  EXPECT_TRUE(verify_certificate(r62).ok());
  EXPECT_THROW(max_independent_set(7, 2), CapExceeded);
}

TEST(Search, AtLeastCosetSizeAndAtMostHoffman) {
  for (int n = 3; n <= 5; ++n)
    for (int t = 1; t <= n; ++t) {
      auto r = max_independent_set(n, t);
      ASSERT_TRUE(r.exact);
      EXPECT_GE(r.independence_number, factorial(n - t)) << n << " " << t;
      EXPECT_LE(r.independence_number, hoffman_floor(n, t)) << n << " " << t;
      EXPECT_TRUE(r.witness.contains(Permutation::identity(n)));
    }
  auto r = max_independent_set(6, 2);
  EXPECT_LE(r.independence_number, hoffman_floor(6, 2));
}

TEST(Search, Deterministic) {
  auto a = max_independent_set(5, 2);
  auto b = max_independent_set(5, 2);
  EXPECT_EQ(a.witness.members(), b.witness.members());
  EXPECT_EQ(a.stats.nodes, b.stats.nodes);
}

TEST(Search, InvariantUnderRelabelling) {
  std::mt19937_64 rng(99);
  for (int n : {4, 5}) {
    auto perms = all_permutations(n);
    auto g = forbidden_agreement_graph(perms, 2);
    auto base = max_independent_set(g).vertices.size();
    for (int trial = 0; trial < 3; ++trial) {
      // Conjugate every vertex by a random pi: agreement is preserved.
      auto pi = testing::random_permutation(rng, n);
      std::vector<Permutation> conj;
      for (const auto& p : perms) conj.push_back(compose(compose(pi, p), pi.inverse()));
      auto gc = forbidden_agreement_graph(conj, 2);
      EXPECT_EQ(max_independent_set(gc).vertices.size(), base);
      // Shuffle vertex ids as well.
      std::vector<std::size_t> order(perms.size());
      std::iota(order.begin(), order.end(), 0);
      shuffle_in_place(rng, order);
      std::vector<Permutation> shuffled;
      for (auto i : order) shuffled.push_back(perms[i]);
      EXPECT_EQ(max_independent_set(forbidden_agreement_graph(shuffled, 2)).vertices.size(), base);
    }
  }
}

TEST(Search, ForcedVertexMatchesUnforced) {
  for (int n : {4, 5}) {
    auto g = forbidden_agreement_graph(all_permutations(n), 2);
    SearchOptions forced;
    forced.forced_vertex = 0;
    EXPECT_EQ(max_independent_set(g, forced).vertices.size(), max_independent_set(g).vertices.size());
  }
}

TEST(Search, BudgetGivesLabelledPartialResult) {
  auto r = max_independent_set(6, 3, false, 1000);
  EXPECT_FALSE(r.exact);
  EXPECT_TRUE(r.stats.budget_hit);
  EXPECT_EQ(r.upper_bound, hoffman_floor(6, 3));
  EXPECT_LE(r.independence_number, r.upper_bound);
  EXPECT_TRUE(verify(r.witness, Predicate::independent_in(3)).holds);
}

TEST(Certificate, TamperedWitnessFails) {
  auto r = max_independent_set(4, 2);
  ASSERT_TRUE(verify_certificate(r).ok());
  auto members = r.witness.members();
  for_each_permutation(4, [&](const Permutation& p) {
    if (members.size() == r.witness.size() && !r.witness.contains(p) &&
        agree_count(p, members.front()) == 1)
      members.push_back(p);
  });
  SearchResult bad = r;
  bad.witness = Family(4, "tampered", members);
  bad.independence_number = Integer(bad.witness.size());
  EXPECT_FALSE(verify_certificate(bad).ok());
  EXPECT_FALSE(verify_certificate(bad).independent);
}

TEST(Certificate, TwoCosetMaximality) {
  auto coset = t_coset({{1, 1}, {2, 2}}, 5);
  bool maximal = is_maximal_independent(coset, 2);
  std::cout << "  2-coset maximal in the n=5 graph: " << (maximal ? "yes" : "no") << '\n';
  SUCCEED();
}

}  // namespace
}  // namespace symspec
