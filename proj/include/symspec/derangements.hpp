#pragma once

#include <vector>

#include "symspec/exact.hpp"

namespace symspec {

/// Derangement numbers of S_n split by parity.
struct DerangementCounts {
  Integer total;  // d_n
  Integer even;   // e_n
  Integer odd;    // o_n
};

/// d_n = sum_{i=0}^n (-1)^i n!/i!.
inline Integer derangements_inclusion_exclusion(int n) {
  if (n < 0) throw InvalidArgument("derangements: n must be non-negative");
  const Integer nf = factorial(n);
  Integer d = 0;
  Integer ifact = 1;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) ifact *= i;
    Integer term = nf / ifact;
    d += (i % 2 == 0) ? term : Integer(-term);
  }
  return d;
}

/// d_0 = 1, d_1 = 0, d_n = (n-1)(d_{n-1} + d_{n-2}).
inline Integer derangements_recurrence(int n) {
  if (n < 0) throw InvalidArgument("derangements: n must be non-negative");
  Integer prev2 = 1, prev1 = 0;
  if (n == 0) return prev2;
  for (int k = 2; k <= n; ++k) {
    Integer next = (k - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

/// e_n - o_n = (-1)^{n-1}(n-1).
inline Integer derangement_parity_difference(int n) { return sign_power(n + 1) * (n - 1); }

inline DerangementCounts derangement_counts(int n) {
  Integer d = derangements_inclusion_exclusion(n);
  if (d != derangements_recurrence(n))
    throw InvariantViolation("derangement formula and recurrence disagree");
  Integer diff = derangement_parity_difference(n);
  return {d, (d + diff) / 2, (d - diff) / 2};
}

/// Shorthand for d_n; d_n = 0 for n < 0 is not defined and throws.
inline Integer derangement(int n) { return derangements_recurrence(n); }

}  // namespace symspec
