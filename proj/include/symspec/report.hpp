#pragma once

// Serialisation of results and the bundle that reproduces the eigenvalue table,
// bounds and family sizes over a range of n. Integers are written as decimal
// strings and rationals as "p/q" so nothing is truncated to a machine width.

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "symspec/bounds.hpp"
#include "symspec/brute_force.hpp"
#include "symspec/derangements.hpp"
#include "symspec/families.hpp"
#include "symspec/search.hpp"
#include "symspec/spectrum.hpp"
#include "symspec/weight_opt.hpp"

namespace symspec {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "symspec-report/1";
inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct ReportConfig {
  std::string command;
  std::optional<int> n;
  std::optional<std::pair<int, int>> n_range;
  std::optional<int> t;
  std::string format = "json";
  bool slow = false;
  int cap = kDefaultEnumerationCap;
  std::uint64_t seed = kDefaultSeed;
};

inline Json to_json(const Integer& v) { return to_string(v); }
inline Json to_json(const Rational& v) { return to_string(v); }

inline Json to_json(const ReportConfig& c) {
  Json j;
  j["command"] = c.command;
  if (c.n) j["n"] = *c.n;
  if (c.n_range) j["n_range"] = {c.n_range->first, c.n_range->second};
  if (c.t) j["t"] = *c.t;
  j["format"] = c.format;
  j["slow"] = c.slow;
  j["cap"] = c.cap;
  j["seed"] = std::to_string(c.seed);
  return j;
}

/// Every report starts with the schema version and the config that produced it.
inline Json report_header(const ReportConfig& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = to_json(c);
  return j;
}

inline Json to_json(const Spectrum& s) {
  Json j;
  j["n"] = s.n();
  j["degree"] = to_json(s.degree());
  j["lambda_min"] = to_json(s.lambda_min());
  Json arg = Json::array();
  for (const auto& p : s.argmin()) arg.push_back(to_string(p));
  j["argmin"] = arg;
  j["lambda_second"] = to_json(s.lambda_second());
  j["nu"] = to_json(s.nu());
  j["trace_check"] = s.trace_check();
  Json rows = Json::array();
  for (const auto& r : s.rows())
    rows.push_back({{"partition", to_string(r.partition)},
                    {"eigenvalue", to_json(r.eigenvalue)},
                    {"dimension", to_json(r.dimension)},
                    {"multiplicity", to_json(r.multiplicity)}});
  j["rows"] = rows;
  return j;
}

inline Json to_json(const std::map<Integer, Integer>& multiset) {
  Json j = Json::array();
  for (const auto& [v, m] : multiset) j.push_back({{"eigenvalue", to_json(v)}, {"multiplicity", to_json(m)}});
  return j;
}

inline Json to_json(const BoundReport& r) {
  return {{"n", r.n},
          {"t", r.t},
          {"degree", to_json(r.degree)},
          {"lambda_min", to_json(r.lambda_min)},
          {"nu", to_json(r.nu)},
          {"N", to_json(r.order)},
          {"hoffman_value", to_json(r.hoffman_value)},
          {"cross_value", to_json(r.cross_value)},
          {"ratio_to_target", to_json(r.ratio_to_target)}};
}

inline Json to_json(const Permutation& p) { return to_cycle_string(p); }

inline Json to_json(const SearchResult& r, const CertificateCheck& c) {
  Json members = Json::array();
  for (const auto& p : r.witness.members()) members.push_back(to_json(p));
  return {{"n", r.n},
          {"t", r.t},
          {"independence_number", to_json(r.independence_number)},
          {"exact", r.exact},
          {"upper_bound", to_json(r.upper_bound)},
          {"witness", members},
          {"certificate",
           {{"nodes", std::to_string(r.stats.nodes)},
            {"prunes", std::to_string(r.stats.prunes)},
            {"budget_hit", r.stats.budget_hit},
            {"stopped_at_upper_bound", r.stats.stopped_at_upper_bound},
            {"independent", c.independent},
            {"maximal", c.maximal},
            {"size_matches", c.size_matches}}}};
}

inline Json to_json(const WeightOptResult& r) {
  const int n = r.weighting.n;
  const int t = r.weighting.t;
  Json classes = Json::array();
  Json w = Json::object();
  for (const auto& [c, v] : r.weighting.weights) {
    classes.push_back(to_string(c));
    w[to_string(c)] = to_json(v);
  }
  return {{"formalism", "non-negative conjugation-invariant Hoffman LP"},
          {"n", n},
          {"t", t},
          {"classes", classes},
          {"weights", w},
          {"lambda_min", to_json(r.least_eigenvalue)},
          {"bound", to_json(r.bound)},
          {"uniform_bound", to_json(r.uniform_bound)},
          {"ratio_to_(n-t)!", to_json(r.bound / Rational(factorial(n - t)))},
          {"ratio_to_(n-2)!", to_json(r.bound / Rational(factorial(n - 2)))},
          {"certified", r.certified}};
}

// ---------------------------------------------------------------- table

struct TableCell {
  Integer eigenvalue;              // from the character sum
  std::optional<Integer> closed;   // closed form, n >= 6 only
  bool matches = true;
};

struct TableReport {
  std::vector<int> ns;
  std::vector<bool> collision;               // per n: rows name repeated partitions
  std::vector<std::vector<TableCell>> cells;  // [row][n index]
  bool all_match() const {
    for (const auto& row : cells)
      for (const auto& c : row)
        if (!c.matches) return false;
    return true;
  }
};

inline TableReport build_table(int lo, int hi) {
  TableReport t;
  t.cells.assign(kTableRows.size(), {});
  for (int n = lo; n <= hi; ++n) {
    if (n < 4) throw InvalidArgument("the eigenvalue table needs n >= 4");
    auto spec = forbidden_agreement_spectrum(n, 2);
    t.ns.push_back(n);
    t.collision.push_back(n < kClosedFormMinN);
    for (std::size_t r = 0; r < kTableRows.size(); ++r) {
      TableCell c;
      c.eigenvalue = spec.row(row_partition(kTableRows[r], n)).eigenvalue;
      if (n >= kClosedFormMinN) {
        c.closed = closed_form_eigenvalue(kTableRows[r], n);
        c.matches = *c.closed == c.eigenvalue;
      }
      t.cells[r].push_back(std::move(c));
    }
  }
  return t;
}

inline Json to_json(const TableReport& t) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < kTableRows.size(); ++r) {
    Json vals = Json::array();
    for (std::size_t k = 0; k < t.ns.size(); ++k) {
      const auto& c = t.cells[r][k];
      Json cell = {{"n", t.ns[k]}, {"eigenvalue", to_json(c.eigenvalue)}};
      if (c.closed)
        cell["closed_form"] = to_json(*c.closed);
      else
        cell["regime"] = "collision regime";
      cell["status"] = c.matches ? "pass" : "fail";
      vals.push_back(cell);
    }
    rows.push_back({{"partition", row_label(kTableRows[r])}, {"values", vals}});
  }
  return {{"ns", t.ns}, {"rows", rows}, {"status", t.all_match() ? "pass" : "fail"}};
}

/// One row per closed-form partition in table order, one column per n.
/// Columns in the collision regime (n < 6) are marked with '*'.
inline std::string to_text(const TableReport& t) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head = {"partition"};
  for (std::size_t k = 0; k < t.ns.size(); ++k)
    head.push_back("n=" + std::to_string(t.ns[k]) + (t.collision[k] ? "*" : ""));
  grid.push_back(head);
  for (std::size_t r = 0; r < kTableRows.size(); ++r) {
    std::vector<std::string> line = {row_label(kTableRows[r])};
    for (const auto& c : t.cells[r]) line.push_back(to_string(c.eigenvalue) + (c.matches ? "" : " !"));
    grid.push_back(line);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : grid)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  std::ostringstream os;
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i == 0)
        os << std::left << std::setw(static_cast<int>(width[i])) << line[i];
      else
        os << "  " << std::right << std::setw(static_cast<int>(width[i])) << line[i];
    }
    os << '\n';
  }
  bool any_collision = std::find(t.collision.begin(), t.collision.end(), true) != t.collision.end();
  if (any_collision) os << "* collision regime: rows name repeated partitions; character-sum values shown\n";
  return os.str();
}

inline std::string to_csv(const TableReport& t) {
  std::ostringstream os;
  os << "partition";
  for (int n : t.ns) os << ",n=" << n;
  os << '\n';
  for (std::size_t r = 0; r < kTableRows.size(); ++r) {
    os << '"' << row_label(kTableRows[r]) << '"';
    for (const auto& c : t.cells[r]) os << ',' << c.eigenvalue;
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- bundle

struct Bundle {
  Json json;
  bool pass = true;
  std::vector<std::string> failures;
};

/// Eigenvalue table, least eigenvalues, Hoffman ratios and family sizes for
/// every n in [lo, hi], with a status per check. An empty range (lo > hi)
/// gives an empty bundle that passes.
inline Bundle reproduce_bundle(int lo, int hi, const ReportConfig& cfg) {
  Bundle b;
  b.json = report_header(cfg);
  Json checks = Json::array();
  auto check = [&](const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"status", ok ? "pass" : "fail"}});
    if (!ok) {
      b.pass = false;
      b.failures.push_back(name);
    }
  };
  if (lo > hi) {
    b.json["sections"] = Json::object();
    b.json["checks"] = checks;
    b.json["status"] = "pass";
    return b;
  }
  if (lo < 4) throw InvalidArgument("reproduce needs n >= 4");
  if (hi > 12) throw CapExceeded("reproduce is capped at n = 12");

  Json sections;
  auto table = build_table(lo, hi);
  sections["table"] = to_json(table);
  check("table: closed forms equal character sums", table.all_match());

  Json spectra = Json::array();
  Json hoffman = Json::array();
  for (int n = lo; n <= hi; ++n) {
    auto spec = forbidden_agreement_spectrum(n, 2);
    Json arg = Json::array();
    for (const auto& p : spec.argmin()) arg.push_back(to_string(p));
    spectra.push_back({{"n", n},
                       {"lambda_min", to_json(spec.lambda_min())},
                       {"argmin", arg},
                       {"trace_check", spec.trace_check() ? "pass" : "fail"}});
    check("trace identity n=" + std::to_string(n), spec.trace_check());
    if (n >= 5) {
      auto r = bound_report(n, 2);
      const bool sound = r.hoffman_value >= Rational(factorial(n - 2));
      Json h = to_json(r);
      h["ratio_to_(n-2)!"] = to_json(r.ratio_to_target);
      h["ratio_to_(n-2)!_approx"] = to_double(r.ratio_to_target);
      h["status"] = sound ? "pass" : "fail";
      hoffman.push_back(h);
      check("hoffman >= (n-2)! n=" + std::to_string(n), sound);
    }
  }
  sections["spectra"] = spectra;
  sections["hoffman"] = hoffman;

  Json fams = Json::array();
  for (int n = std::max(lo, kFamilyMinN); n <= hi; ++n) {
    Json entry = {{"n", n}};
    auto b_count = count_family_B(n);
    auto b_formula = family_B_size_formula(n);
    entry["B"] = {{"enumerated", to_json(b_count)}, {"formula", to_json(b_formula)},
                  {"status", b_count == b_formula ? "pass" : "fail"}};
    check("|B| formula n=" + std::to_string(n), b_count == b_formula);
    for (int j = 1; j <= 4; ++j) {
      auto c = count_family_F(j, n);
      auto f = family_F_size_formula(j, n);
      entry["F" + std::to_string(j)] = {{"enumerated", to_json(c)}, {"formula", to_json(f)},
                                        {"status", c == f ? "pass" : "fail"}};
      check("|F" + std::to_string(j) + "| formula n=" + std::to_string(n), c == f);
    }
    fams.push_back(entry);
  }
  sections["families"] = fams;

  b.json["sections"] = sections;
  b.json["checks"] = checks;
  b.json["status"] = b.pass ? "pass" : "fail";
  return b;
}

/// Derangement report; the parity split is also counted directly for n <= 9.
inline Json derangement_report(int n) {
  auto counts = derangement_counts(n);
  Json j = {{"n", n},
            {"d", to_json(counts.total)},
            {"inclusion_exclusion", to_json(derangements_inclusion_exclusion(n))},
            {"recurrence", to_json(derangements_recurrence(n))},
            {"even", to_json(counts.even)},
            {"odd", to_json(counts.odd)},
            {"even_minus_odd", to_json(derangement_parity_difference(n))}};
  if (n <= 9) {
    Integer e = 0, o = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      if (p.fixed_point_count() == 0) (p.sign() > 0 ? e : o) += 1;
    });
    j["enumerated_even"] = to_json(e);
    j["enumerated_odd"] = to_json(o);
    j["status"] = (e == counts.even && o == counts.odd) ? "pass" : "fail";
  } else {
    j["status"] = "pass";
  }
  return j;
}

}  // namespace symspec
