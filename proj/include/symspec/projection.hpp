#pragma once

// Isotypic projections of C[S_n] and the exact distance from a family's
// characteristic vector to a sum of isotypic components, under the averaged
// inner product <f,g> = (1/n!) sum f(s)g(s).

#include <Eigen/Core>

#include <map>
#include <vector>

#include "symspec/characters.hpp"
#include "symspec/exact.hpp"
#include "symspec/family.hpp"
#include "symspec/permutation.hpp"

namespace symspec {

inline constexpr int kProjectionMatrixCap = 5;
inline constexpr int kPairSumCap = 7;

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// P_alpha = scale * C with C(s,t) = chi_alpha(s t^-1) and scale = f/n!.
/// Rows and columns follow all_permutations(n) (lexicographic).
class ProjectionMatrix {
 public:
  ProjectionMatrix(Partition alpha, Integer dim, Integer order, IntMatrix chars)
      : alpha_(std::move(alpha)), dim_(std::move(dim)), order_(std::move(order)),
        chars_(std::move(chars)) {}

  const Partition& partition() const { return alpha_; }
  const Integer& dimension() const { return dim_; }
  Rational scale() const { return Rational(dim_, order_); }
  const IntMatrix& characters() const { return chars_; }
  Eigen::Index rows() const { return chars_.rows(); }

  Rational entry(Eigen::Index i, Eigen::Index j) const { return scale() * Integer(chars_(i, j)); }

  /// trace(P) = (f/n!) * n! * f.
  Rational trace() const { return scale() * Integer(chars_.trace()); }

  /// P^2 = P  <=>  f C^2 = n! C.
  bool is_idempotent() const {
    IntMatrix sq = chars_ * chars_;
    const long long f = dim_.convert_to<long long>();
    const long long n = order_.convert_to<long long>();
    return (f * sq - n * chars_).isZero(0);
  }

  bool is_symmetric() const { return chars_ == chars_.transpose(); }

 private:
  Partition alpha_;
  Integer dim_;
  Integer order_;
  IntMatrix chars_;
};

inline ProjectionMatrix isotypic_projection(const Partition& alpha, int n,
                                            int cap = kProjectionMatrixCap) {
  if (alpha.size() != n) throw InvalidArgument("partition " + to_string(alpha) + " is not of n");
  if (n > cap) throw CapExceeded("projection matrices are materialized only up to n = " +
                                 std::to_string(cap));
  auto table = CharacterTable::of(n);
  const std::size_t a = table->index_of(alpha);
  const auto perms = all_permutations(n);
  const auto m = static_cast<Eigen::Index>(perms.size());
  std::vector<Permutation> inverses;
  for (const auto& p : perms) inverses.push_back(p.inverse());
  IntMatrix c(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      auto cls = table->index_of(Partition(compose(perms[i], inverses[j]).cycle_lengths()));
      c(i, j) = table->value(a, cls).convert_to<long long>();
    }
  return ProjectionMatrix(alpha, table->dimension(a), factorial(n), std::move(c));
}

/// P_alpha P_beta = 0.
inline bool are_orthogonal(const ProjectionMatrix& p, const ProjectionMatrix& q) {
  return (p.characters() * q.characters()).isZero(0);
}

/// sum_alpha P_alpha = I  <=>  sum_alpha f_alpha C_alpha = n! I.
inline bool sums_to_identity(const std::vector<ProjectionMatrix>& ps) {
  if (ps.empty()) return false;
  const auto m = ps.front().rows();
  IntMatrix total = IntMatrix::Zero(m, m);
  for (const auto& p : ps) total += p.dimension().convert_to<long long>() * p.characters();
  return total == m * IntMatrix::Identity(m, m);
}

namespace detail {

inline void check_u_partitions(int n, const std::vector<Partition>& u) {
  for (const auto& p : u)
    if (p.size() != n) throw InvalidArgument("partition " + to_string(p) + " is not of n");
}

}  // namespace detail

/// ||P_alpha x_A||^2 = (1/n!) sum_{s,t in A} (f/n!) chi_alpha(s t^-1), for every
/// alpha of n in canonical order, from the cycle-type histogram of s t^-1.
inline std::vector<Rational> isotypic_weights(const Family& family, int cap = kPairSumCap) {
  const int n = family.degree();
  if (n > cap) throw CapExceeded("pair-sum projection norms are capped at n = " + std::to_string(cap));
  auto table = CharacterTable::of(n);
  std::vector<Integer> hist(table->size(), 0);
  const auto& m = family.members();
  std::vector<Permutation> inv;
  for (const auto& p : m) inv.push_back(p.inverse());
  std::map<std::vector<int>, std::size_t> cls;
  for (std::size_t i = 0; i < table->size(); ++i) {
    auto parts = table->partitions()[i].parts();
    cls.emplace(std::vector<int>(parts.begin(), parts.end()), i);
  }
  for (const auto& s : m)
    for (const auto& t : inv) hist[cls.at(compose(s, t).cycle_lengths())] += 1;
  const Integer order = factorial(n);
  std::vector<Rational> out;
  for (std::size_t a = 0; a < table->size(); ++a) {
    Integer sum = 0;
    for (std::size_t c = 0; c < table->size(); ++c) sum += hist[c] * table->value(a, c);
    out.emplace_back(table->dimension(a) * sum, order * order);
  }
  return out;
}

/// D^2 = ||x_A||^2 - ||P_U x_A||^2 with U the sum of the listed isotypic
/// components; computed by the pair-sum formula.
inline Rational exact_distance_to_U(const Family& family, const std::vector<Partition>& u,
                                    int cap = kPairSumCap) {
  const int n = family.degree();
  detail::check_u_partitions(n, u);
  auto table = CharacterTable::of(n);
  auto w = isotypic_weights(family, cap);
  Rational d2(Integer(family.size()), factorial(n));
  std::vector<std::size_t> seen;
  for (const auto& p : u) {
    auto a = table->index_of(p);
    if (std::find(seen.begin(), seen.end(), a) != seen.end()) continue;
    seen.push_back(a);
    d2 -= w[a];
  }
  return d2;
}

/// The same distance through explicit projection matrices (n <= 5).
inline Rational distance_to_U_by_matrices(const Family& family, const std::vector<Partition>& u) {
  const int n = family.degree();
  detail::check_u_partitions(n, u);
  const auto perms = all_permutations(n);
  Eigen::Matrix<long long, Eigen::Dynamic, 1> x =
      Eigen::Matrix<long long, Eigen::Dynamic, 1>::Zero(static_cast<Eigen::Index>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i) x(i) = family.contains(perms[i]) ? 1 : 0;
  IntMatrix total = IntMatrix::Zero(x.size(), x.size());
  const Integer order = factorial(n);
  std::vector<Partition> distinct;
  for (const auto& p : u)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  // sum of f*C over U, so P_U = (1/n!) * total
  for (const auto& p : distinct) {
    auto proj = isotypic_projection(p, n);
    total += proj.dimension().convert_to<long long>() * proj.characters();
  }
  Eigen::Matrix<long long, Eigen::Dynamic, 1> y = total * x;
  Integer sq = 0;
  for (Eigen::Index i = 0; i < y.size(); ++i) sq += Integer(y(i)) * Integer(y(i));
  // ||P_U x||^2 = (1/n!) * sum (y_i/n!)^2
  return Rational(Integer(family.size()), order) - Rational(sq, order * order * order);
}

}  // namespace symspec
