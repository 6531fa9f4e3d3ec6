#include <gtest/gtest.h>

#include <iostream>

#include "symspec/families.hpp"
#include "symspec/generating_set.hpp"

namespace symspec {
namespace {

// Direct scan of S_n, independent of the coset enumerator.
template <class Pred>
Integer count_in_sn(int n, Pred pred) {
  Integer c = 0;
  for_each_permutation(n, [&](const Permutation& p) {
    if (pred(p)) c += 1;
  });
  return c;
}

int fixed_at_or_above(const Permutation& p, int k) {
  int c = 0;
  for (int i = k; i <= p.degree(); ++i) c += (p(i) == i);
  return c;
}

TEST(Coset, Examples) {
  auto a = t_coset({{1, 1}, {2, 2}}, 5);
  EXPECT_EQ(a.size(), 6u);
  EXPECT_TRUE(verify(a, Predicate::independent_in(2)).holds);
  EXPECT_EQ(t_coset({{1, 2}}, 4).size(), 6u);
  EXPECT_THROW(t_coset({{1, 2}, {1, 3}}, 4), InvalidArgument);
  EXPECT_THROW(t_coset({{1, 2}, {3, 2}}, 4), InvalidArgument);
}

TEST(Coset, AllTwoCosetsAreIndependent) {
  for (int n = 2; n <= 9; ++n) {
    // Up to conjugation every 2-coset is a translate of the one fixing 1 and 2;
    // still check a spread of them directly.
    std::vector<std::vector<std::pair<int, int>>> picks = {
        {{1, 1}, {2, 2}}, {{1, 2}, {2, 1}}, {{1, n}, {n, 1}}, {{2, 1}, {n, n - 1}}};
    for (const auto& pairs : picks) {
      if (n == 2 && pairs[0].first == pairs[1].first) continue;
      auto c = t_coset(pairs, n);
      EXPECT_EQ(c.size(), factorial(n - 2).convert_to<std::size_t>());
      EXPECT_TRUE(verify(c, Predicate::no_singleton_intersection()).holds) << n;
      EXPECT_TRUE(verify(c, Predicate::t_intersecting(2)).holds) << n;
    }
  }
}

TEST(Coset, EveryTwoCosetAtSmallN) {
  for (int n = 3; n <= 6; ++n)
    for (int i1 = 1; i1 <= n; ++i1)
      for (int i2 = i1 + 1; i2 <= n; ++i2)
        for (int j1 = 1; j1 <= n; ++j1)
          for (int j2 = 1; j2 <= n; ++j2) {
            if (j1 == j2) continue;
            EXPECT_TRUE(
                verify(t_coset({{i1, j1}, {i2, j2}}, n), Predicate::no_singleton_intersection())
                    .holds);
          }
}

TEST(Verify, Witnesses) {
  const int n = 4;
  Family pair(n, "pair", {Permutation::identity(n), parse_cycles("(1 2)", n)});
  EXPECT_TRUE(verify(pair, Predicate::no_singleton_intersection()).holds);
  Family bad(n, "bad", {Permutation::identity(n), parse_cycles("(1 2 3)", n)});
  auto v = verify(bad, Predicate::no_singleton_intersection());
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->first, Permutation::identity(n));
  EXPECT_EQ(v.witness->second, parse_cycles("(1 2 3)", n));
}

TEST(Verify, WitnessIsLexicographicallyLeast) {
  const int n = 5;
  Family f(n, "f", {parse_cycles("(1 2 3)", n), parse_cycles("(2 3 4)", n),
                    Permutation::identity(n), parse_cycles("(3 4 5)", n)});
  auto v = verify(f, Predicate::t_intersecting(3));
  ASSERT_FALSE(v.holds);
  // Brute force: the least pair (a, b), a < b, with agreement below 3.
  std::optional<std::pair<Permutation, Permutation>> best;
  for (const auto& a : f.members())
    for (const auto& b : f.members())
      if (a < b && agree_count(a, b) < 3) {
        auto cand = std::make_pair(a, b);
        if (!best || cand < *best) best = cand;
      }
  EXPECT_EQ(v.witness, best);
}

TEST(Verify, CapEnforced) {
  auto big = t_coset({{1, 1}}, 8);
  EXPECT_THROW(verify(big, Predicate::no_singleton_intersection(), 100), CapExceeded);
}

TEST(FamilyB, TailFromPredicate) {
  auto tail = b_tail(9);
  ASSERT_EQ(tail.size(), 4u);
  std::vector<std::string> got;
  for (const auto& p : tail) got.push_back(to_cycle_string(p));
  std::sort(got.begin(), got.end());
  auto statement = b_tail_statement_listing();
  std::sort(statement.begin(), statement.end());
  EXPECT_EQ(got, statement);
  auto proof = b_tail_proof_listing();
  std::sort(proof.begin(), proof.end());
  EXPECT_NE(got, proof);
  // (1 4 3 2) sends 2 to 1, so it does not map {1,2} onto {3,4}.
  EXPECT_EQ(parse_cycles("(1 4 3 2)", 9)(2), 1);
}

TEST(FamilyB, SizeAtNine) {
  auto b = family_B(9);
  EXPECT_EQ(b.size(), 3234u);
  EXPECT_EQ(family_B_size_formula(9), 3234);
  Integer scanned = count_in_sn(9, [](const Permutation& p) {
    if (p(1) == 1 && p(2) == 2) return fixed_at_or_above(p, 5) != 1;
    bool small = true;
    for (int i = 5; i <= 9; ++i) small = small && p(i) == i;
    return small && (p(1) == 3 || p(1) == 4) && (p(2) == 3 || p(2) == 4);
  });
  EXPECT_EQ(scanned, 3234);
}

TEST(FamilyB, SizeFormulaAtEightAndNine) {
  for (int n : {7, 8, 9}) EXPECT_EQ(Integer(family_B(n).size()), family_B_size_formula(n)) << n;
  EXPECT_THROW(family_B(6), InvalidArgument);
}

TEST(FamilyB, NoSingletonIntersectionAtNine) {
  auto b = family_B(9);
  EXPECT_TRUE(verify(b, Predicate::no_singleton_intersection()).holds);
  EXPECT_FALSE(contained_in_two_coset(b));
}

TEST(FamilyB, FixedPartIsG4) {
  for (int n : {8, 9}) {
    auto b = family_B(n);
    auto fixed = intersection(b, t_coset({{1, 1}, {2, 2}}, n), "B fixing 1,2");
    EXPECT_EQ(fixed.members(), family_G(4, n).members());
    EXPECT_EQ(Integer(b.size()), family_G_size_formula(4, n) + 4);
  }
}

TEST(FamilyB, SizeRatioApproachesOneMinusInverseE) {
  for (int n = 8; n <= 12; ++n) {
    Rational r = Rational(family_B_size_formula(n)) / Rational(factorial(n - 2));
    std::cout << "  |B|/(n-2)! at n=" << n << ": " << to_double(r) << '\n';
    EXPECT_GT(r, Rational(6, 10));
    EXPECT_LT(r, Rational(66, 100));
  }
}

TEST(CaseFamilies, SizesAtEight) {
  EXPECT_EQ(family_F(1, 8).size(), 264u);
  EXPECT_EQ(family_F(2, 8).size(), 309u);
  EXPECT_EQ(family_F(3, 8).size(), 265u);
  EXPECT_EQ(family_F(4, 8).size(), 256u);
  EXPECT_THROW(family_F(5, 8), InvalidArgument);
  EXPECT_THROW(family_G(0, 8), InvalidArgument);
}

TEST(CaseFamilies, FormulasAgainstScan) {
  for (int n : {7, 8, 9})
    for (int j = 1; j <= 4; ++j) {
      const int from = j == 1 ? 3 : (j == 4 ? 5 : 4);
      const int want = j == 2 ? 0 : 1;
      Integer scanned = count_in_sn(n, [&](const Permutation& p) {
        return p(1) == 1 && p(2) == 2 && fixed_at_or_above(p, from) == want;
      });
      EXPECT_EQ(scanned, family_F_size_formula(j, n)) << j << " " << n;
      EXPECT_EQ(Integer(family_F(j, n).size()), scanned);
      EXPECT_EQ(Integer(family_G(j, n).size()), family_G_size_formula(j, n));
    }
}

TEST(HiltonMilner, Examples) {
  auto hm = hm_families(5, 1);
  EXPECT_EQ(hm.size(), 14u);
  Integer scanned = count_in_sn(5, [](const Permutation& p) {
    if (p == parse_cycles("(1 2)", 5)) return true;
    return p(1) == 1 && fixed_at_or_above(p, 3) > 0;
  });
  EXPECT_EQ(scanned, 14);
  EXPECT_TRUE(verify(hm, Predicate::t_intersecting(1)).holds);
  for (int t = 1; t <= 4; ++t) {
    auto f = hm_families(t + 2, t);
    for (int i = 1; i <= t; ++i) {
      std::vector<int> img(t + 2);
      std::iota(img.begin(), img.end(), 1);
      std::swap(img[i - 1], img[t]);
      EXPECT_TRUE(f.contains(Permutation(img)));
    }
  }
  EXPECT_THROW(hm_families(3, 2), InvalidArgument);
}

TEST(HiltonMilner, TIntersecting) {
  for (int t = 1; t <= 3; ++t)
    for (int n = t + 3; n <= 7; ++n)
      EXPECT_TRUE(verify(hm_families(n, t), Predicate::t_intersecting(t)).holds) << n << " " << t;
  // At n = t + 2 two of the added transpositions share only t - 1 points.
  for (int t = 2; t <= 4; ++t) {
    auto v = verify(hm_families(t + 2, t), Predicate::t_intersecting(t));
    ASSERT_FALSE(v.holds);
    EXPECT_EQ(agree_count(v.witness->first, v.witness->second), t - 1);
  }
}

TEST(AuxiliaryFamilies, H) {
  const int n = 8;
  auto pi = parse_cycles("(2 3 4)(5 6)(7 8)", n);
  EXPECT_EQ(moved_from_five(pi).size(), 4u);
  auto h = family_H(pi, n);
  EXPECT_EQ(h.size(), 65u);
  EXPECT_GE(Integer(h.size()), family_H_lower_bound(pi));
  EXPECT_EQ(family_H_lower_bound(pi), 54);
  // (1 2) moves nothing from 5 on, so its H family is empty.
  EXPECT_TRUE(moved_from_five(parse_cycles("(1 2)", n)).empty());
  EXPECT_TRUE(family_H(parse_cycles("(1 2)", n), n).empty());
  // Every member meets pi in exactly one point, so H avoids any independent
  // family that contains pi.
  for (const auto& s : h.members()) EXPECT_EQ(agree_count(s, pi), 1);
}

TEST(AuxiliaryFamilies, M) {
  const int n = 8;
  auto rho = parse_cycles("(1 3)(2 4)(5 6)", n);
  EXPECT_EQ(fixed_from_five(rho), (std::vector<int>{7, 8}));
  auto m = family_M(rho, n);
  EXPECT_EQ(m.size(), 36u);
  EXPECT_GE(Integer(m.size()), family_M_lower_bound(rho));
  auto id = Permutation::identity(n);
  EXPECT_EQ(fixed_from_five(id), (std::vector<int>{5, 6, 7, 8}));
}

TEST(CrossPredicates, PointSplitRules) {
  const int n = 7;
  auto a = t_coset({{1, 1}, {2, 2}}, n);
  // Within one coset fixing 1 and 2, every pair shares both points, so the
  // two-point predicate forbids exactly the pairs agreeing at three points.
  auto v = verify(a, a, Predicate::first_two_points_split());
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(agree_count(v.witness->first, v.witness->second), 3);
  Family one(n, "one", {Permutation::identity(n)});
  Family two(n, "two", {parse_cycles("(3 4 5 6 7)", n)});
  EXPECT_FALSE(verify(one, two, Predicate::first_point_split()).holds);
  Family three(n, "three", {parse_cycles("(2 3 4 5 6 7)", n)});
  EXPECT_TRUE(verify(one, three, Predicate::first_point_split()).holds);
  EXPECT_THROW(verify(one, Predicate::first_point_split()), InvalidArgument);
}

TEST(Counting, AgreeingExactlyOnce) {
  EXPECT_EQ(count_agreeing_exactly_once(parse_cycles("(1 3)(2 4)", 6), 6), 8);
  Integer scanned = count_in_sn(6, [](const Permutation& p) {
    return p(1) == 1 && p(2) == 2 && agree_count(p, parse_cycles("(1 3)(2 4)", 6)) == 1;
  });
  EXPECT_EQ(scanned, 8);
  for (int n : {7, 8, 9}) {
    auto c = count_agreeing_exactly_once(parse_cycles("(1 2)", n), n);
    Rational r = Rational(c) / Rational(factorial(n - 2));
    EXPECT_GT(r, Rational(3, 10));
    EXPECT_LT(r, Rational(45, 100));
  }
  EXPECT_EQ(count_agreeing_exactly_once(parse_cycles("(1 2)", 8), 8), 264);
  // tau fixing 1 and 2 agrees with every member at two points at least.
  EXPECT_EQ(count_agreeing_exactly_once(Permutation::identity(6), 6), 0);
}

TEST(Counting, ManyFixedPoints) {
  for (int n = 1; n <= 9; ++n) {
    const int k = n / 2;
    EXPECT_LE(count_with_fixed_points_at_least(n, k) * factorial(k), factorial(n)) << n;
  }
}

TEST(Export, TextOneLinePerMember) {
  Family f(4, "f", {Permutation::identity(4), parse_cycles("(1 3)(2 4)", 4)});
  EXPECT_EQ(f.to_text(), "id\n(1 3)(2 4)\n");
}

}  // namespace
}  // namespace symspec
