#pragma once

// Eigenvalue bounds for independent sets in regular graphs: Hoffman's ratio
// bound, its cross-independent form, and the stability form that bounds the
// distance of an independent set's indicator from a spectral subspace.

#include <algorithm>
#include <string>
#include <vector>

#include "symspec/exact.hpp"
#include "symspec/spectrum.hpp"

namespace symspec {

/// |X| <= (-lambda_min)/(d - lambda_min) * N for every independent set X.
inline Rational hoffman_bound(const Integer& degree, const Integer& lambda_min, const Integer& order) {
  if (degree <= 0) throw InvalidArgument("hoffman_bound: degree must be positive");
  if (lambda_min >= 0) throw InvalidArgument("hoffman_bound: least eigenvalue must be negative");
  return Rational(-lambda_min * order, degree - lambda_min);
}

/// sqrt(|X||Y|) <= nu/(d + nu) * N for cross-independent X, Y.
inline Rational cross_hoffman_bound(const Integer& degree, const Integer& nu, const Integer& order) {
  if (degree <= 0) throw InvalidArgument("cross_hoffman_bound: degree must be positive");
  if (nu < 0) throw InvalidArgument("cross_hoffman_bound: nu must be non-negative");
  return Rational(nu * order, degree + nu);
}

/// The square of cross_hoffman_bound, compared directly against |X||Y|.
inline Rational cross_hoffman_bound_squared(const Integer& degree, const Integer& nu,
                                            const Integer& order) {
  Rational b = cross_hoffman_bound(degree, nu, order);
  return b * b;
}

/// D^2 <= ((1 - a)|lambda_N| - d a) / (|lambda_N| - |lambda_M|) * a, where a is
/// the density |X|/N of an independent set and D its distance to
/// U = span{f} + (eigenspaces of lambda_{M+1}, ..., lambda_N).
inline Rational stability_gap_bound(const Integer& degree, const Integer& lambda_m,
                                    const Integer& lambda_n, const Rational& density) {
  const Integer big = abs(lambda_n);
  const Integer small = abs(lambda_m);
  if (big <= small) throw InvalidArgument("stability_gap_bound: need |lambda_N| > |lambda_M|");
  if (density < 0 || density > 1) throw InvalidArgument("stability_gap_bound: density outside [0,1]");
  return ((1 - density) * big - degree * density) / Rational(big - small) * density;
}

/// Spectral split used by the stability bound: lambda_M and lambda_N in
/// non-increasing order, and the partitions whose isotypic components make up
/// U (the trivial partition plus every eigenspace met at an index > M).
struct StabilitySplit {
  Integer split_index;  // M
  Integer lambda_m;
  Integer lambda_n;
  std::vector<Partition> u_partitions;  // canonical order
};

inline StabilitySplit stability_split(const Spectrum& spectrum, const Integer& split_index) {
  const Integer order = factorial(spectrum.n());
  if (split_index < 1 || split_index >= order)
    throw InvalidArgument("stability split index must lie in [1, N-1]");
  StabilitySplit out{split_index, spectrum.sorted_eigenvalue(split_index),
                     spectrum.sorted_eigenvalue(order), {}};
  std::vector<Integer> tail;
  for (const auto& b : spectrum.sorted_blocks())
    if (b.last > split_index) tail.push_back(b.eigenvalue);
  for (const auto& r : spectrum.rows()) {
    bool trivial = r.partition.length() == 1;
    if (trivial || std::find(tail.begin(), tail.end(), r.eigenvalue) != tail.end())
      out.u_partitions.push_back(r.partition);
  }
  return out;
}

/// M = n! - (f^{(n-2,2)})^2 - (f^{(n-2,1,1)})^2, the split whose tail is meant
/// to be the (n-2,2) and (n-2,1,1) eigenvalues.
inline Integer default_split_index(int n) {
  if (n < 4) throw InvalidArgument("default split needs n >= 4");
  Integer a = dimension(Partition({n - 2, 2}));
  Integer b = dimension(Partition({n - 2, 1, 1}));
  return factorial(n) - a * a - b * b;
}

struct BoundReport {
  int n = 0;
  int t = 0;
  Integer degree;
  Integer lambda_min;
  Integer nu;
  Integer order;            // N = n!
  Rational hoffman_value;   // bound on |X|
  Rational cross_value;     // bound on sqrt(|X||Y|)
  Rational ratio_to_target; // hoffman_value / (n-t)!
};

inline BoundReport bound_report(int n, int t) {
  auto spec = forbidden_agreement_spectrum(n, t);
  BoundReport r;
  r.n = n;
  r.t = t;
  r.degree = spec.degree();
  r.lambda_min = spec.lambda_min();
  r.nu = spec.nu();
  r.order = factorial(n);
  r.hoffman_value = hoffman_bound(r.degree, r.lambda_min, r.order);
  r.cross_value = cross_hoffman_bound(r.degree, r.nu, r.order);
  r.ratio_to_target = r.hoffman_value / Rational(factorial(n - t));
  return r;
}

}  // namespace symspec
