#pragma once

// Spectra of normal Cayley graphs on S_n. Each isotypic component U_alpha is
// an eigenspace with eigenvalue
//   lambda_alpha = (1/f^alpha) sum_{sigma in X} chi_alpha(sigma)
// and multiplicity (f^alpha)^2.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symspec/characters.hpp"
#include "symspec/derangements.hpp"
#include "symspec/exact.hpp"
#include "symspec/generating_set.hpp"
#include "symspec/partition.hpp"

namespace symspec {

inline Integer eigenvalue(const CharacterTable& table, std::size_t alpha, const GeneratingSet& x) {
  if (table.degree() != x.degree()) throw InvalidArgument("eigenvalue: degree mismatch");
  Integer sum = 0;
  for (const auto& c : x.classes()) sum += c.class_size() * table.value(alpha, table.index_of(c.shape()));
  const Integer& f = table.dimension(alpha);
  if (sum % f != 0)
    throw InvariantViolation("eigenvalue for " + to_string(table.partitions()[alpha]) +
                             " is not an integer");
  return sum / f;
}

inline Integer eigenvalue(const Partition& alpha, const GeneratingSet& x) {
  if (alpha.size() != x.degree()) throw InvalidArgument("eigenvalue: partition is not of n");
  auto table = CharacterTable::of(x.degree());
  return eigenvalue(*table, table->index_of(alpha), x);
}

/// The eight partitions of n with closed-form eigenvalues, in table order.
enum class TableRow {
  Trivial,        // (n)
  Sign,           // (1^n)
  Standard,       // (n-1,1)
  StandardTwist,  // (2,1^{n-2})
  TwoRow,         // (n-2,2)
  TwoRowTwist,    // (2,2,1^{n-4})
  Hook,           // (n-2,1,1)
  HookTwist,      // (3,1^{n-3})
};

inline constexpr std::array<TableRow, 8> kTableRows = {
    TableRow::Trivial,       TableRow::Sign,   TableRow::Standard, TableRow::StandardTwist,
    TableRow::TwoRow,        TableRow::TwoRowTwist, TableRow::Hook, TableRow::HookTwist};

inline std::string row_label(TableRow row) {
  switch (row) {
    case TableRow::Trivial: return "(n)";
    case TableRow::Sign: return "(1^n)";
    case TableRow::Standard: return "(n-1,1)";
    case TableRow::StandardTwist: return "(2,1^{n-2})";
    case TableRow::TwoRow: return "(n-2,2)";
    case TableRow::TwoRowTwist: return "(2,2,1^{n-4})";
    case TableRow::Hook: return "(n-2,1,1)";
    case TableRow::HookTwist: return "(3,1^{n-3})";
  }
  return "?";
}

inline Partition row_partition(TableRow row, int n) {
  if (n < 4) throw InvalidArgument("table rows need n >= 4");
  auto ones = [](int k) { return std::vector<int>(static_cast<std::size_t>(k), 1); };
  std::vector<int> p;
  switch (row) {
    case TableRow::Trivial: p = {n}; break;
    case TableRow::Sign: p = ones(n); break;
    case TableRow::Standard: p = {n - 1, 1}; break;
    case TableRow::StandardTwist: p = ones(n - 2); p.insert(p.begin(), 2); break;
    case TableRow::TwoRow: p = {n - 2, 2}; break;
    case TableRow::TwoRowTwist: p = ones(n - 4); p.insert(p.begin(), {2, 2}); break;
    case TableRow::Hook: p = {n - 2, 1, 1}; break;
    case TableRow::HookTwist: p = ones(n - 3); p.insert(p.begin(), 3); break;
  }
  return Partition::from_unsorted(std::move(p));
}

/// Closed-form eigenvalue of Gamma_n for a table row, evaluated exactly
/// without validity checks. Defined for n >= 4 (all denominators nonzero);
/// for n < 6 some rows name the same partition.
inline Rational evaluate_closed_form(TableRow row, int n) {
  if (n < 4) throw InvalidArgument("closed forms need n >= 4");
  const Integer d = derangement(n - 1);
  const Integer s = sign_power(n);  // (-1)^n
  switch (row) {
    case TableRow::Trivial: return Rational(n * d);
    case TableRow::Sign: return Rational(sign_power(n - 2) * n * (n - 2));
    case TableRow::Standard: return Rational(0);
    case TableRow::StandardTwist: return Rational(0);
    case TableRow::TwoRow: {
      // -n d_{n-1}/((n-1)(n-2)-2) * (1 + (-1)^n (n-2)/d_{n-1})
      Rational factor = Rational(1) + Rational(s * (n - 2), d);
      return -Rational(n * d, (n - 1) * (n - 2) - 2) * factor;
    }
    case TableRow::TwoRowTwist: return Rational(sign_power(n - 1) * (n - 2) * (n - 2));
    case TableRow::Hook: {
      // -n d_{n-1}/((n-1)(n-2)) * (1 - (-1)^n (n-2)/d_{n-1})
      Rational factor = Rational(1) - Rational(s * (n - 2), d);
      return -Rational(n * d, (n - 1) * (n - 2)) * factor;
    }
    case TableRow::HookTwist: return Rational(s * n * (n - 4));
  }
  return 0;
}

/// Smallest n at which the eight table rows are distinct partitions.
inline constexpr int kClosedFormMinN = 6;

/// Closed-form eigenvalue of Gamma_n = Cay(S_n, E_n) for one of the eight
/// table rows. Requires n >= 6; throws if a rational row is not integral.
inline Integer closed_form_eigenvalue(TableRow row, int n) {
  if (n < kClosedFormMinN)
    throw InvalidArgument("closed_form_eigenvalue requires n >= 6 (rows collide for n < 6)");
  return to_integer(evaluate_closed_form(row, n));
}

struct SpectrumRow {
  Partition partition;
  Integer eigenvalue;
  Integer multiplicity;  // (f^alpha)^2
  Integer dimension;     // f^alpha
};

class Spectrum {
 public:
  Spectrum(int n, Integer degree, std::vector<SpectrumRow> rows)
      : n_(n), degree_(std::move(degree)), rows_(std::move(rows)) {}

  int n() const { return n_; }
  /// |X|, equal to the eigenvalue of the trivial row.
  const Integer& degree() const { return degree_; }
  const std::vector<SpectrumRow>& rows() const { return rows_; }

  const SpectrumRow& row(const Partition& p) const {
    for (const auto& r : rows_)
      if (r.partition == p) return r;
    throw InvalidArgument("partition " + to_string(p) + " not in spectrum");
  }

  Integer lambda_min() const {
    Integer m = rows_.front().eigenvalue;
    for (const auto& r : rows_) m = std::min(m, r.eigenvalue);
    return m;
  }

  /// Partitions attaining lambda_min, canonical order.
  std::vector<Partition> argmin() const {
    Integer m = lambda_min();
    std::vector<Partition> out;
    for (const auto& r : rows_)
      if (r.eigenvalue == m) out.push_back(r.partition);
    return out;
  }

  /// Second-largest eigenvalue counted with multiplicity: lambda_1 = degree is
  /// removed once (the constant vector).
  Integer lambda_second() const {
    std::optional<Integer> best;
    for (const auto& r : rows_) {
      Integer mult = r.multiplicity - (r.eigenvalue == degree_ && r.partition.length() == 1 ? 1 : 0);
      if (mult > 0 && (!best || r.eigenvalue > *best)) best = r.eigenvalue;
    }
    return best.value_or(degree_);
  }

  /// nu = max(|lambda_2|, |lambda_N|).
  Integer nu() const { return std::max(abs(lambda_second()), abs(lambda_min())); }

  /// Distinct eigenvalues with summed multiplicities, ascending.
  std::map<Integer, Integer> eigenvalue_multiset() const {
    std::map<Integer, Integer> m;
    for (const auto& r : rows_) m[r.eigenvalue] += r.multiplicity;
    return m;
  }

  Integer total_multiplicity() const {
    Integer s = 0;
    for (const auto& r : rows_) s += r.multiplicity;
    return s;
  }

  /// Sum of multiplicity * lambda^2; equals n! |X| for a Cayley graph.
  Integer trace_of_square() const {
    Integer s = 0;
    for (const auto& r : rows_) s += r.multiplicity * r.eigenvalue * r.eigenvalue;
    return s;
  }

  bool trace_check() const { return trace_of_square() == factorial(n_) * degree_; }

  /// Eigenvalues sorted non-increasingly with multiplicity, as
  /// (eigenvalue, first index, last index) blocks with 1-based indices.
  struct Block {
    Integer eigenvalue;
    Integer first;
    Integer last;
  };
  std::vector<Block> sorted_blocks() const {
    auto ms = eigenvalue_multiset();
    std::vector<Block> out;
    Integer next = 1;
    for (auto it = ms.rbegin(); it != ms.rend(); ++it) {
      out.push_back({it->first, next, next + it->second - 1});
      next += it->second;
    }
    return out;
  }

  /// lambda_i in non-increasing order (1-based, i <= n!).
  Integer sorted_eigenvalue(const Integer& i) const {
    for (const auto& b : sorted_blocks())
      if (i >= b.first && i <= b.last) return b.eigenvalue;
    throw InvalidArgument("eigenvalue index out of range");
  }

 private:
  int n_;
  Integer degree_;
  std::vector<SpectrumRow> rows_;
};

inline Spectrum full_spectrum(const GeneratingSet& x) {
  auto table = CharacterTable::of(x.degree());
  std::vector<SpectrumRow> rows;
  for (std::size_t a = 0; a < table->size(); ++a) {
    const Integer& f = table->dimension(a);
    rows.push_back({table->partitions()[a], eigenvalue(*table, a, x), f * f, f});
  }
  return Spectrum(x.degree(), x.total(), std::move(rows));
}

inline Spectrum forbidden_agreement_spectrum(int n, int t) {
  return full_spectrum(GeneratingSet::forbidden_agreement(n, t));
}

}  // namespace symspec
