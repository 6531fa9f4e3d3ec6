#pragma once

// Explicit adjacency matrices of Cayley graphs on S_n and their spectra by
// direct diagonalization. Used as an oracle for the character-theoretic
// spectrum; shares no code with it beyond cycle types.

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "symspec/exact.hpp"
#include "symspec/generating_set.hpp"
#include "symspec/permutation.hpp"

namespace symspec {

inline constexpr int kBruteForceCap = 7;
inline constexpr int kExactRankCap = 6;

/// 0/1 adjacency of Cay(S_n, X): sigma ~ tau iff tau^{-1} sigma lies in X.
/// Vertices are the elements of S_n in lexicographic order.
inline std::vector<std::vector<std::uint8_t>> adjacency_matrix(const GeneratingSet& x,
                                                               int cap = kBruteForceCap) {
  const int n = x.degree();
  if (n > cap) throw CapExceeded("adjacency matrix of S_" + std::to_string(n) + " exceeds cap");
  auto verts = all_permutations(n, cap);
  std::set<Partition> classes;
  for (const auto& c : x.classes()) classes.insert(c.shape());
  const std::size_t big_n = verts.size();
  std::vector<std::vector<std::uint8_t>> adj(big_n, std::vector<std::uint8_t>(big_n, 0));
  for (std::size_t j = 0; j < big_n; ++j) {
    Permutation inv = verts[j].inverse();
    for (std::size_t i = 0; i < big_n; ++i)
      adj[i][j] = classes.count(Partition(compose(inv, verts[i]).cycle_lengths())) ? 1 : 0;
  }
  return adj;
}

/// Nullity of (A - lambda I) over GF(p), p = 2^31 - 1. This is an upper bound
/// on the rational nullity; it is compared with the rounded float count.
inline std::size_t nullity_mod_p(const std::vector<std::vector<std::uint8_t>>& adj, long long lambda) {
  constexpr std::uint64_t p = 2147483647ULL;
  const std::size_t n = adj.size();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
  const std::uint64_t lam = static_cast<std::uint64_t>(((lambda % static_cast<long long>(p)) +
                                                        static_cast<long long>(p)) %
                                                       static_cast<long long>(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = adj[i][j] % p;
  for (std::size_t i = 0; i < n; ++i) m[i][i] = (m[i][i] + p - lam) % p;
  auto pow_mod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = pow_mod(m[rank][col], p - 2);
    for (std::size_t j = col; j < n; ++j) m[rank][j] = m[rank][j] * inv % p;
    const auto& prow = m[rank];
    for (std::size_t r = rank + 1; r < n; ++r) {
      const std::uint64_t f = m[r][col];
      if (f == 0) continue;
      auto& row = m[r];
      for (std::size_t j = col; j < n; ++j) row[j] = (row[j] + (p - f) * prow[j]) % p;
    }
    ++rank;
  }
  return n - rank;
}

namespace detail {

// Number of eigenvalues below x of the tridiagonal matrix (diag, sub).
inline long long sturm_count(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub, double x) {
  long long neg = 0;
  double q = 1.0;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    double b2 = i == 0 ? 0.0 : sub(i - 1) * sub(i - 1);
    q = diag(i) - x - (i == 0 ? 0.0 : b2 / q);
    if (q == 0.0) q = -1e-300;
    if (q < 0) ++neg;
  }
  return neg;
}

// Multiplicity of every integer eigenvalue in [-bound, bound]. Returns the
// counts and 0 if all eigenvalues lie within 1e-6 of an integer, otherwise
// 0.5 as the rounding error.
inline std::pair<std::map<long long, long long>, double> integral_spectrum_by_sturm(
    const Eigen::MatrixXd& a, long long bound) {
  Eigen::Tridiagonalization<Eigen::MatrixXd> tri(a);
  Eigen::VectorXd diag = tri.diagonal();
  Eigen::VectorXd sub = tri.subDiagonal();
  std::map<long long, long long> counts;
  double err = 0.0;
  long long total = 0;
  for (long long k = -bound; k <= bound; ++k) {
    const double x = static_cast<double>(k);
    long long wide = sturm_count(diag, sub, x + 0.5) - sturm_count(diag, sub, x - 0.5);
    if (wide == 0) continue;
    long long tight = sturm_count(diag, sub, x + 1e-6) - sturm_count(diag, sub, x - 1e-6);
    if (tight != wide) err = 0.5;
    counts[k] = wide;
    total += wide;
  }
  if (total != a.rows()) err = 0.5;
  return {counts, err};
}

}  // namespace detail

struct BruteForceSpectrum {
  std::map<Integer, Integer> multiset;  // eigenvalue -> multiplicity
  double max_rounding_error = 0.0;
  bool ranks_verified = false;  // exact nullity check ran and agreed
};

/// Spectrum of the explicit n! x n! adjacency matrix. Float eigenvalues are
/// rounded to integers (Cayley graphs on S_n have integral spectra) and the
/// exact traces of A and A^2 are re-checked against the rounded multiset. For
/// n <= kExactRankCap each multiplicity is also compared with a modular nullity.
inline BruteForceSpectrum brute_force_spectrum(const GeneratingSet& x, int cap = kBruteForceCap,
                                               bool verify_ranks = true) {
  auto adj = adjacency_matrix(x, cap);
  const auto big_n = static_cast<Eigen::Index>(adj.size());
  Eigen::MatrixXd a(big_n, big_n);
  for (Eigen::Index i = 0; i < big_n; ++i)
    for (Eigen::Index j = 0; j < big_n; ++j) a(i, j) = adj[i][j];
  BruteForceSpectrum out;
  std::map<long long, long long> counts;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() == Eigen::Success) {
    for (Eigen::Index i = 0; i < big_n; ++i) {
      double v = solver.eigenvalues()(i);
      double r = std::round(v);
      out.max_rounding_error = std::max(out.max_rounding_error, std::abs(v - r));
      ++counts[static_cast<long long>(r)];
    }
  } else {
    // QR iteration can stall on very degenerate spectra; count eigenvalues by
    // Sturm sequences on the tridiagonal form instead.
    long long bound = 0;
    for (const auto& row : adj) {
      long long s = 0;
      for (auto e : row) s += e;
      bound = std::max(bound, s);
    }
    auto stats = detail::integral_spectrum_by_sturm(a, bound);
    counts = std::move(stats.first);
    out.max_rounding_error = stats.second;
  }
  if (out.max_rounding_error > 1e-6)
    throw InvariantViolation("adjacency spectrum is not integral within 1e-6");
  for (auto [v, m] : counts) out.multiset[Integer(v)] = m;

  Integer trace1 = 0, trace2 = 0, ones = 0, diag = 0;
  for (const auto& [v, m] : out.multiset) {
    trace1 += m * v;
    trace2 += m * v * v;
  }
  for (std::size_t i = 0; i < adj.size(); ++i) {
    diag += adj[i][i];
    for (auto e : adj[i]) ones += e;
  }
  if (trace1 != diag || trace2 != ones)
    throw InvariantViolation("rounded spectrum fails the exact trace identities");

  if (verify_ranks && x.degree() <= kExactRankCap) {
    for (auto [v, m] : counts)
      if (nullity_mod_p(adj, v) != static_cast<std::size_t>(m))
        throw InvariantViolation("exact nullity disagrees with float multiplicity for eigenvalue " +
                                 std::to_string(v));
    out.ranks_verified = true;
  }
  return out;
}

}  // namespace symspec
