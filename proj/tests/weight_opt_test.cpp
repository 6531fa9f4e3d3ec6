#include <gtest/gtest.h>

#include <iostream>
#include <random>

#include "symspec/families.hpp"
#include "symspec/search.hpp"
#include "symspec/weight_opt.hpp"

namespace symspec {
namespace {

TEST(Lp, SmallKnownOptimum) {
  // max 3x + 2y  s.t.  x + y <= 4, x + 3y <= 6, x <= 3  ->  (3, 1), value 11.
  LinearProgram lp{{{1, 1}, {1, 3}, {1, 0}}, {4, 6, 3}, {3, 2}};
  auto s = solve_lp(lp);
  EXPECT_EQ(s.x, (std::vector<Rational>{3, 1}));
  EXPECT_EQ(s.value, Rational(11));
  EXPECT_TRUE(certifies_optimum(lp, s));
  auto tampered = s;
  tampered.x[1] = 0;
  EXPECT_FALSE(certifies_optimum(lp, tampered));
}

TEST(Lp, UnboundedAndBadInput) {
  LinearProgram unbounded{{{-1, 1}}, {1}, {1, 0}};
  EXPECT_THROW(solve_lp(unbounded), InvariantViolation);
  LinearProgram negative{{{1}}, {-1}, {1}};
  EXPECT_THROW(solve_lp(negative), InvalidArgument);
}

TEST(WeightedEigenvalue, UniformRecoversUnweighted) {
  for (int n = 4; n <= 8; ++n)
    for (int t : {2, 3}) {
      auto w = uniform_weighting(n, t);
      auto x = GeneratingSet::forbidden_agreement(n, t);
      for (const auto& p : all_partitions(n))
        EXPECT_EQ(weighted_eigenvalue(p, w), Rational(eigenvalue(p, x), x.total()));
      EXPECT_EQ(weighted_eigenvalue(Partition({n}), w), Rational(1));
      EXPECT_EQ(weighted_hoffman_bound(w), hoffman_bound(x.total(), forbidden_agreement_spectrum(n, t).lambda_min(), factorial(n)));
    }
}

TEST(WeightedEigenvalue, SingleClass) {
  const int n = 6;
  CycleType c(Partition({3, 2, 1}));
  ClassWeighting w{n, 2, {{c, Rational(1, c.class_size())}}};
  validate(w);
  auto table = CharacterTable::of(n);
  for (const auto& p : all_partitions(n))
    EXPECT_EQ(weighted_eigenvalue(p, w), Rational(table->value(p, c), table->dimension(p)));
  EXPECT_EQ(weighted_eigenvalue(Partition({6}), w), Rational(1));
}

TEST(WeightedEigenvalue, Validation) {
  const int n = 6;
  ClassWeighting off{n, 2, {{CycleType(Partition({2, 2, 1, 1})), Rational(1, 45)}}};
  EXPECT_THROW(validate(off), InvalidArgument);
  ClassWeighting zero{n, 2, {{CycleType(Partition({5, 1})), Rational(0)}}};
  EXPECT_THROW(validate(zero), InvalidArgument);
  ClassWeighting unnormalised{n, 2, {{CycleType(Partition({5, 1})), Rational(1)}}};
  EXPECT_THROW(validate(unnormalised), InvalidArgument);
}

// Largest independent family we can exhibit and check: a t-coset, the
// Hilton-Milner type family, and at n = 6, t = 2 the exact search witness.
Integer largest_verified_family(int n, int t) {
  Integer best = 0;
  auto coset = t_coset([&] {
    std::vector<std::pair<int, int>> p;
    for (int i = 1; i <= t; ++i) p.emplace_back(i, i);
    return p;
  }(), n);
  if (n <= 7) EXPECT_TRUE(verify(coset, Predicate::independent_in(t)).holds);
  best = std::max(best, Integer(coset.size()));
  if (n <= 7 && n >= t + 3) {
    auto hm = hm_families(n, t);
    EXPECT_TRUE(verify(hm, Predicate::independent_in(t)).holds);
    best = std::max(best, Integer(hm.size()));
  }
  if (n == 6 && t == 2) {
    auto r = max_independent_set(6, 2);
    EXPECT_TRUE(verify_certificate(r).ok());
    best = std::max(best, r.independence_number);
  }
  return best;
}

TEST(OptimizeBound, BetweenWitnessAndUniform) {
  for (int n : {6, 7, 8})
    for (int t : {2, 3}) {
      auto r = optimize_bound(n, t);
      EXPECT_TRUE(r.certified) << n << " " << t;
      EXPECT_LE(r.bound, r.uniform_bound);
      EXPECT_GE(r.bound, Rational(largest_verified_family(n, t))) << n << " " << t;
      EXPECT_LT(r.least_eigenvalue, 0);
      std::cout << "  n=" << n << " t=" << t << " bound=" << to_string(r.bound)
                << " ratio to (n-2)!=" << to_double(r.bound / Rational(factorial(n - 2))) << '\n';
    }
}

TEST(OptimizeBound, Examples) {
  EXPECT_EQ(optimize_bound(6, 2).bound, Rational(48));
  EXPECT_LE(optimize_bound(6, 2).bound, bound_report(6, 2).hoffman_value);
  EXPECT_GE(optimize_bound(6, 2).bound, Rational(24));
  EXPECT_THROW(optimize_bound(5, 5), InvalidArgument);
}

TEST(OptimizeBound, RandomFeasibleWeightingsAreSound) {
  std::mt19937_64 rng(4242);
  for (int n = 5; n <= 8; ++n)
    for (int t : {2, 3}) {
      auto classes = weighting_classes(n, t);
      auto best = optimize_bound(n, t).bound;
      auto floor = Rational(largest_verified_family(n, t));
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Integer> raw;
        Integer total = 0;
        for (const auto& c : classes) {
          raw.push_back(Integer(draw_below(rng, 5)));
          total += raw.back();
        }
        if (total == 0) continue;
        ClassWeighting w{n, t, {}};
        for (std::size_t i = 0; i < classes.size(); ++i)
          w.weights[classes[i]] = Rational(raw[i], total * classes[i].class_size());
        auto b = weighted_hoffman_bound(w);
        EXPECT_GE(b, best);
        EXPECT_GE(b, floor);
      }
    }
}

}  // namespace
}  // namespace symspec
