// Command-line front end. Exit codes: 0 pass, 1 verification failure,
// 2 usage error (bad arguments or a request beyond the enumeration caps).

#include <iostream>
#include <random>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "symspec/symspec.hpp"

namespace {

using namespace symspec;

constexpr int kExitPass = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct VerificationFailure : Error {
  using Error::Error;
};

std::pair<int, int> parse_range(const std::string& text) {
  static const std::regex re(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InvalidArgument("n-range must look like 6..12");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void require(bool ok, const std::string& invariant) {
  if (!ok) throw VerificationFailure(invariant);
}

Family named_family(const std::string& name, int n, int t) {
  if (name == "B") return family_B(n);
  if (name == "2coset") {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= t; ++i) pairs.emplace_back(i, i);
    return t_coset(pairs, n);
  }
  if (name == "HM") return hm_families(n, t);
  static const std::regex fg(R"(([FG])([1-4]))");
  std::smatch m;
  if (std::regex_match(name, m, fg)) {
    const int j = std::stoi(m[2]);
    return m[1] == "F" ? family_F(j, n) : family_G(j, n);
  }
  throw InvalidArgument("unknown family '" + name + "' (B, F1..F4, G1..G4, 2coset, HM)");
}

std::optional<Integer> family_formula(const std::string& name, int n, int t) {
  if (name == "B") return family_B_size_formula(n);
  if (name == "2coset") return factorial(n - t);
  if (name.size() == 2 && (name[0] == 'F' || name[0] == 'G')) {
    const int j = name[1] - '0';
    return name[0] == 'F' ? family_F_size_formula(j, n) : family_G_size_formula(j, n);
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of forbidden-agreement Cayley graphs on S_n"};
  app.require_subcommand(1);

  ReportConfig cfg;
  int n = 0;
  int t = 2;
  std::string range_text;
  std::string format;
  bool verify_flag = false;
  bool verify_independence = false;
  bool exact = false;
  std::string family_name;
  std::uint64_t budget = kDefaultNodeBudget;
  int samples = 200;
  std::uint64_t seed = kDefaultSeed;

  auto add_n = [&](CLI::App* c) { c->add_option("--n", n, "degree n")->required(); };
  auto add_t = [&](CLI::App* c) { c->add_option("--t", t, "agreement parameter t (default 2)"); };
  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", seed, "random seed"); };

  auto* chartable = app.add_subcommand("chartable", "character table of S_n");
  add_n(chartable);
  chartable->add_option("--format", format, "csv (default) or json");

  auto* spectrum = app.add_subcommand("spectrum", "full spectrum of the graph");
  add_n(spectrum);
  add_t(spectrum);
  spectrum->add_flag("--verify", verify_flag, "compare with the explicit adjacency matrix");
  spectrum->add_flag("--slow", cfg.slow, "allow the n = 7 matrix oracle");

  auto* table = app.add_subcommand("table", "closed-form eigenvalue table");
  table->add_option("--n-range", range_text, "range such as 6..10")->required();
  table->add_option("--format", format, "text (default), json or csv");

  auto* hoffman = app.add_subcommand("hoffman", "Hoffman and cross-Hoffman bounds");
  add_n(hoffman);
  add_t(hoffman);

  auto* families = app.add_subcommand("families", "construct and verify a named family");
  add_n(families);
  add_t(families);
  families->add_option("--family", family_name, "B, F1..F4, G1..G4, 2coset or HM")->required();
  families->add_flag("--verify-independence", verify_independence,
                     "check the family is independent in the t-graph");
  families->add_option("--format", format, "json (default) or text (one member per line)");

  auto* search = app.add_subcommand("search", "exact maximum independent set");
  add_n(search);
  add_t(search);
  search->add_flag("--exact", exact, "require an exact result (default behaviour)");
  search->add_flag("--slow", cfg.slow, "allow n = 7");
  search->add_option("--budget", budget, "node budget");

  auto* wopt = app.add_subcommand("wopt", "optimal class-weighted Hoffman bound");
  add_n(wopt);
  add_t(wopt);

  auto* der = app.add_subcommand("derangements", "derangement numbers and parity split");
  add_n(der);

  auto* stability = app.add_subcommand("stability", "stability bound on random independent sets");
  add_n(stability);
  stability->add_option("--samples", samples, "number of random sets (default 200)");
  add_seed(stability);

  auto* reproduce = app.add_subcommand("reproduce", "table, bounds and family sizes bundle");
  reproduce->add_option("--n-range", range_text, "range such as 6..12")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (auto* o = sub->get_option_no_throw("--n"); o != nullptr && o->count() > 0) cfg.n = n;
    if (sub->get_option_no_throw("--t") != nullptr) cfg.t = t;
    cfg.seed = seed;
    if (!format.empty()) cfg.format = format;
    if (!range_text.empty()) cfg.n_range = parse_range(range_text);

    if (sub == chartable) {
      auto tab = CharacterTable::of(n);
      if (format.empty() || format == "csv") {
        std::cout << tab->to_csv();
      } else if (format == "json") {
        Json j = report_header(cfg);
        Json rows = Json::array();
        for (std::size_t a = 0; a < tab->size(); ++a) {
          Json vals = Json::array();
          for (std::size_t c = 0; c < tab->size(); ++c) vals.push_back(to_json(tab->value(a, c)));
          rows.push_back({{"partition", to_string(tab->partitions()[a])}, {"values", vals}});
        }
        Json cls = Json::array();
        for (const auto& c : tab->classes()) cls.push_back(to_string(c));
        j["classes"] = cls;
        j["rows"] = rows;
        emit(j);
      } else {
        throw InvalidArgument("chartable format must be csv or json");
      }
    } else if (sub == spectrum) {
      auto x = GeneratingSet::forbidden_agreement(n, t);
      auto s = full_spectrum(x);
      Json j = report_header(cfg);
      j["spectrum"] = to_json(s);
      j["eigenvalue_multiset"] = to_json(s.eigenvalue_multiset());
      bool ok = s.trace_check();
      if (verify_flag) {
        const int cap = cfg.slow ? kBruteForceCap : kExactRankCap;
        auto bf = brute_force_spectrum(x, cap);
        const bool same = bf.multiset == s.eigenvalue_multiset();
        j["verify"] = {{"oracle", "explicit adjacency matrix"},
                       {"multiset_equal", same},
                       {"max_rounding_error", bf.max_rounding_error},
                       {"ranks_verified", bf.ranks_verified}};
        ok = ok && same;
      }
      j["status"] = ok ? "pass" : "fail";
      emit(j);
      require(s.trace_check(), "trace identity");
      require(j["status"] == "pass", "spectrum equals brute-force adjacency spectrum");
    } else if (sub == table) {
      auto [lo, hi] = *cfg.n_range;
      auto tab = build_table(lo, hi);
      if (format.empty() || format == "text") {
        std::cout << to_text(tab);
      } else if (format == "csv") {
        std::cout << to_csv(tab);
      } else if (format == "json") {
        Json j = report_header(cfg);
        j["table"] = to_json(tab);
        emit(j);
      } else {
        throw InvalidArgument("table format must be text, csv or json");
      }
      require(tab.all_match(), "closed-form eigenvalues equal character sums");
    } else if (sub == hoffman) {
      auto r = bound_report(n, t);
      Json j = report_header(cfg);
      j["bounds"] = to_json(r);
      const bool sound = r.hoffman_value >= Rational(factorial(n - t));
      j["status"] = sound ? "pass" : "fail";
      emit(j);
      require(sound, "hoffman bound >= (n-t)!");
    } else if (sub == families) {
      auto f = named_family(family_name, n, t);
      if (format == "text") {
        std::cout << f.to_text();
        return kExitPass;
      }
      Json j = report_header(cfg);
      j["n"] = n;
      j["label"] = f.label();
      j["size"] = std::to_string(f.size());
      bool ok = true;
      if (auto formula = family_formula(family_name, n, t)) {
        j["formula_size"] = to_json(*formula);
        ok = ok && *formula == Integer(f.size());
      }
      Json preds = Json::array();
      if (verify_independence) {
        std::vector<Predicate> ps = {Predicate::independent_in(t)};
        if (family_name == "HM") ps.push_back(Predicate::t_intersecting(t));
        for (const auto& p : ps) {
          auto v = verify(f, p);
          Json e = {{"predicate", to_string(p)}, {"holds", v.holds}};
          if (v.witness) e["witness"] = {to_json(v.witness->first), to_json(v.witness->second)};
          preds.push_back(e);
          ok = ok && v.holds;
        }
      }
      j["predicates_checked"] = preds;
      j["status"] = ok ? "pass" : "fail";
      emit(j);
      require(ok, "family " + family_name + " size formula and predicates");
    } else if (sub == search) {
      auto r = max_independent_set(n, t, cfg.slow, budget);
      auto c = verify_certificate(r);
      Json j = report_header(cfg);
      j["result"] = to_json(r, c);
      const bool ok = r.exact ? c.ok() : (c.independent && c.size_matches);
      j["status"] = ok ? (r.exact ? "pass" : "partial") : "fail";
      emit(j);
      require(ok, "search certificate");
      if (exact) require(r.exact, "exact result within the node budget");
    } else if (sub == wopt) {
      auto r = optimize_bound(n, t);
      Json j = report_header(cfg);
      j["result"] = to_json(r);
      const bool ok = r.certified && r.bound <= r.uniform_bound;
      j["status"] = ok ? "pass" : "fail";
      emit(j);
      require(ok, "LP optimum certified and no worse than uniform weights");
    } else if (sub == der) {
      Json j = report_header(cfg);
      j["derangements"] = derangement_report(n);
      emit(j);
      require(j["derangements"]["status"] == "pass", "derangement parity split");
    } else if (sub == stability) {
      auto spec = forbidden_agreement_spectrum(n, 2);
      auto split = stability_split(spec, default_split_index(n));
      std::mt19937_64 rng(seed);
      int violations = 0;
      Rational worst = 0;
      for (int i = 0; i < samples; ++i) {
        auto a = random_two_coset_subset(rng, n);
        auto bound = stability_gap_bound(spec.degree(), split.lambda_m, split.lambda_n,
                                         Rational(Integer(a.size()), factorial(n)));
        auto d2 = exact_distance_to_U(a, split.u_partitions);
        if (d2 > bound) ++violations;
        if (bound > 0 && d2 / bound > worst) worst = d2 / bound;
      }
      Json u = Json::array();
      for (const auto& p : split.u_partitions) u.push_back(to_string(p));
      Json j = report_header(cfg);
      j["split"] = {{"M", to_json(split.split_index)},
                    {"lambda_M", to_json(split.lambda_m)},
                    {"lambda_N", to_json(split.lambda_n)},
                    {"U", u}};
      j["samples"] = samples;
      j["violations"] = violations;
      j["max_distance_to_bound_ratio"] = to_json(worst);
      j["status"] = violations == 0 ? "pass" : "fail";
      emit(j);
      require(violations == 0, "stability bound >= exact squared distance");
    } else if (sub == reproduce) {
      auto [lo, hi] = *cfg.n_range;
      auto b = reproduce_bundle(lo, hi, cfg);
      emit(b.json);
      require(b.pass, b.failures.empty() ? "" : b.failures.front());
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const InvariantViolation& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitPass;
}
