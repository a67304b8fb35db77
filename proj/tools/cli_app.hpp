#pragma once

// Command-line frontend. `run` parses and validates every flag before any
// computation, writes results to `out` and diagnostics to `err`, and returns
// the process exit code:
//   0 success, 1 verification mismatch, 2 flag or parameter error,
//   3 capacity error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flatchain/flatchain.hpp"
#include "flatchain/report.hpp"

namespace flatchain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// FLATCHAIN_CAP overrides the default materialization cap.
inline std::uint64_t cap_from_env() {
  const char* v = std::getenv("FLATCHAIN_CAP");
  if (!v || !*v) return kDefaultCap;
  const BigInt c = parse_bigint(v);
  if (c < 1 || c > BigInt(UINT64_MAX)) throw domain_error("FLATCHAIN_CAP must be a positive 64-bit integer");
  return static_cast<std::uint64_t>(c);
}

/// Accepts "{1,2,3}", "1,2,3" or "" / "{}" for the empty set.
inline KSet parse_kset(const std::string& text, int n) {
  std::string body;
  for (char c : text) {
    if (c != '{' && c != '}' && c != ' ') body += c;
  }
  std::vector<int> elems;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw domain_error("malformed set '" + text + "'");
    elems.push_back(static_cast<int>(parse_bigint(item)));
  }
  return KSet(n, std::move(elems));
}

inline Rational parse_positive(const std::string& text, const char* what) {
  Rational r = parse_rational(text);
  if (r <= 0) throw domain_error(std::string(what) + " must be positive");
  return r;
}

inline void print_json(std::ostream& out, const report::Json& j) { out << j.dump(2) << "\n"; }

struct Options {
  // construct / closure / cascade / rank / unrank / probe
  int n = 0;
  int k = 0;
  std::string m;
  std::string r;
  std::string set;
  bool list = false;
  std::string format;
  // minimize
  std::string alpha;
  std::string beta;
  std::string lambda;
  std::string objective;
  std::string mode = "fsfa";
  // table
  int n_min = 0;
  int n_max = 0;
  int k_min = 0;
  int k_max = 0;
  std::string quantity;
  std::string table_mode = "msfa";
  // verify
  std::string suite = "all";
  std::uint64_t seed = 1;
};

inline int cmd_construct(const Options& o, std::uint64_t cap, std::ostream& out, bool closure) {
  Fsfa f = make_fsfa(o.n, o.k, parse_bigint(o.m));
  if (closure) f = msfa_closure(f);
  std::optional<Family> a;
  std::optional<Family> b;
  if (o.list) {
    a = f.members_a(cap);
    b = f.members_b(cap);
  }
  if (o.format == "text") {
    out << "FSFA n=" << f.n << " k=" << f.k << " m=" << f.m << "\n"
        << "cascade " << f.cascade.to_string() << "\n"
        << "|A|=" << f.size_a << " |B|=" << f.size_b << " size=" << f.size() << " volume=" << f.volume()
        << " blym=" << to_string(f.blym()) << "\n"
        << "msfa " << (is_msfa(f) ? "yes" : "no") << "\n";
    if (o.list) {
      out << "A:";
      for (const auto& s : *a) out << ' ' << s.to_string();
      out << "\nB:";
      for (const auto& s : *b) out << ' ' << s.to_string();
      out << "\n";
    }
    return kExitOk;
  }
  report::Json j = report::fsfa_json(f);
  if (o.list) {
    j["A"] = report::family_members_json(*a);
    j["B"] = report::family_members_json(*b);
  }
  print_json(out, j);
  return kExitOk;
}

inline WeightSpec weight_spec_from(const Options& o) {
  const int given = (!o.alpha.empty() || !o.beta.empty()) + !o.lambda.empty() + !o.objective.empty();
  if (given != 1) throw domain_error("give exactly one of --alpha/--beta, --lambda, --objective");
  if (!o.alpha.empty() || !o.beta.empty()) {
    if (o.alpha.empty() || o.beta.empty()) throw domain_error("--alpha and --beta must be given together");
    return {parse_positive(o.alpha, "alpha"), parse_positive(o.beta, "beta")};
  }
  if (!o.lambda.empty()) return WeightSpec::from_lambda(parse_positive(o.lambda, "lambda"));
  if (o.objective == "size") return WeightSpec::size();
  if (o.objective == "volume") return WeightSpec::volume(o.k);
  return WeightSpec::blym(o.n, o.k);
}

inline int cmd_minimize(const Options& o, std::ostream& out) {
  const WeightSpec spec = weight_spec_from(o);
  const Mode mode = o.mode == "msfa" ? Mode::msfa : Mode::fsfa;
  const OptimumReport rep = optimize(o.n, o.k, spec, mode);
  if (o.format == "text") {
    out << "n=" << rep.n << " k=" << rep.k << " alpha=" << to_string(spec.alpha())
        << " beta=" << to_string(spec.beta()) << " lambda=" << to_string(spec.lambda()) << " mode=" << to_string(mode)
        << "\nminimum weight " << to_string(rep.min_weight) << "\n";
    for (std::size_t j = 0; j < rep.optima.size(); ++j) {
      const auto& opt = rep.optima[j];
      out << (j == rep.canonical ? "* " : "  ") << opt.cascade.to_string() << " |A|=" << opt.m
          << " |B|=" << opt.size_b << "\n";
    }
    return kExitOk;
  }
  print_json(out, report::optimum_report_json(rep));
  return kExitOk;
}

inline std::optional<std::string> table_cell(const Options& o, int n, int k) {
  if (!(1 < k && k < n)) return std::nullopt;
  const Mode mode = o.table_mode == "fsfa" ? Mode::fsfa : Mode::msfa;
  if (o.quantity == "size") return s_nk(n, k).str();
  if (o.quantity == "volume") return numerator(volume_min(n, k).min_weight).str();
  return to_string(blym_min(n, k, mode));
}

inline int cmd_table(const Options& o, std::ostream& out) {
  const int k_max = o.k_max > 0 ? o.k_max : o.n_max;
  if (o.n_min < 1 || o.n_max < o.n_min || o.k_min < 1 || k_max < o.k_min) {
    throw range_error("table: need 1 <= n-min <= n-max and 1 <= k-min <= k-max");
  }
  struct Row {
    int n;
    int k;
    std::optional<std::string> value;
  };
  std::vector<Row> rows;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    for (int k = o.k_min; k <= k_max; ++k) rows.push_back({n, k, table_cell(o, n, k)});
  }
  if (o.format == "json") {
    report::Json a = report::Json::array();
    for (const auto& r : rows) {
      report::Json e;
      e["n"] = r.n;
      e["k"] = r.k;
      e[o.quantity] = r.value ? report::Json(*r.value) : report::Json(nullptr);
      a.push_back(e);
    }
    print_json(out, a);
  } else {
    out << "n\tk\t" << o.quantity << "\n";
    for (const auto& r : rows) out << r.n << "\t" << r.k << "\t" << r.value.value_or("") << "\n";
  }
  return kExitOk;
}

inline int cmd_verify(const Options& o, std::uint64_t cap, std::ostream& out) {
  oracle::SweepConfig cfg;
  cfg.n_min = o.n_min > 0 ? o.n_min : 1;
  cfg.n_max = o.n_max;
  cfg.seed = o.seed;
  cfg.cap = cap;
  if (cfg.n_max < cfg.n_min) throw range_error("verify: need n-min <= n-max");
  std::vector<oracle::CheckLine> lines;
  auto add = [&](std::vector<oracle::CheckLine> more) { lines.insert(lines.end(), more.begin(), more.end()); };
  const bool all = o.suite == "all";
  // Sweeps that would breach a cap throw before any output is written.
  if (o.suite == "flat" && cfg.n_max > oracle::kMaxAntichainN) {
    throw capacity_error("flat suite supports n <= 6");
  }
  if (all || o.suite == "shadows") add(oracle::sweep_shadows(cfg));
  if (all || o.suite == "optima") add(oracle::sweep_optima(cfg));
  if (all || o.suite == "maximality") add(oracle::sweep_maximality(cfg));
  if (all || o.suite == "flat") {
    oracle::SweepConfig flat = cfg;
    flat.n_max = std::min(cfg.n_max, oracle::kMaxAntichainN);
    add(oracle::sweep_flat(flat));
  }
  bool pass = true;
  for (const auto& l : lines) pass = pass && l.pass;
  if (o.format == "json") {
    report::Json j;
    j["suite"] = o.suite;
    j["seed"] = std::to_string(o.seed);
    j["pass"] = pass;
    j["checks"] = report::check_lines_json(lines);
    print_json(out, j);
  } else {
    out << report::check_lines_tsv(lines);
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitMismatch;
}

inline int cmd_probe(const Options& o, std::ostream& out) {
  if (o.n > oracle::kMaxAntichainN) throw capacity_error("probe supports n <= 6");
  if (o.n < 1) throw range_error("probe: n must be >= 1");
  if (o.k > 0) {
    if (o.m.empty()) throw domain_error("probe: --k requires --m");
    const BigInt m = parse_bigint(o.m);
    if (m > binom(o.n, o.k)) throw range_error("probe: m exceeds C(n, k)");
    print_json(out, report::probe_json(oracle::equivalence_probe(o.n, o.k, static_cast<std::uint64_t>(m))));
    return kExitOk;
  }
  report::Json j;
  j["flat_theorem"] = report::flat_theorem_json(oracle::check_flat_theorem(o.n));
  report::Json probes = report::Json::array();
  for (auto [k, m] : oracle::all_msfa(o.n)) probes.push_back(report::probe_json(oracle::equivalence_probe(o.n, k, m)));
  j["probes"] = probes;
  print_json(out, j);
  return kExitOk;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Full and maximal squashed flat antichains: construction, exact optimization, verification"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build the FSFA (n, k, m) and report it");
  construct->add_option("--n", o.n, "ground set size")->required()->check(CLI::Range(1, 1 << 20));
  construct->add_option("--k", o.k, "upper level")->required()->check(CLI::PositiveNumber);
  construct->add_option("--m", o.m, "number of k-sets (decimal)")->required();
  construct->add_flag("--list", o.list, "also list the members of A and B");
  construct->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* closure = app.add_subcommand("closure", "Report the unique MSFA containing the FSFA (n, k, m)");
  closure->add_option("--n", o.n)->required()->check(CLI::Range(1, 1 << 20));
  closure->add_option("--k", o.k)->required()->check(CLI::Range(2, 1 << 20));
  closure->add_option("--m", o.m)->required();
  closure->add_flag("--list", o.list);
  closure->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* minimize = app.add_subcommand("minimize", "All minimum-weight FSFA or MSFA on levels {k-1, k}");
  minimize->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  minimize->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
  minimize->add_option("--alpha", o.alpha, "weight of a k-set, p/q");
  minimize->add_option("--beta", o.beta, "weight of a (k-1)-set, p/q");
  minimize->add_option("--lambda", o.lambda, "beta/alpha, p/q");
  minimize->add_option("--objective", o.objective)->check(CLI::IsMember({"size", "volume", "blym"}));
  minimize->add_option("--mode", o.mode)->check(CLI::IsMember({"fsfa", "msfa"}));
  minimize->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* table = app.add_subcommand("table", "Tabulate minimum size, volume or BLYM value");
  table->add_option("--n-min", o.n_min)->required();
  table->add_option("--n-max", o.n_max)->required();
  table->add_option("--k-min", o.k_min)->default_val(1);
  table->add_option("--k-max", o.k_max);
  table->add_option("--quantity", o.quantity)->required()->check(CLI::IsMember({"size", "blym", "volume"}));
  table->add_option("--mode", o.table_mode, "for blym: msfa (default) or fsfa")->check(CLI::IsMember({"fsfa", "msfa"}));
  table->add_option("--format", o.format)->check(CLI::IsMember({"tsv", "json"}));

  auto* verify = app.add_subcommand("verify", "Run brute-force verification sweeps");
  verify->add_option("--suite", o.suite)->check(CLI::IsMember({"shadows", "optima", "maximality", "flat", "all"}));
  verify->add_option("--n-min", o.n_min);
  verify->add_option("--n-max", o.n_max)->required()->check(CLI::Range(1, 64));
  verify->add_option("--seed", o.seed);
  verify->add_option("--format", o.format)->check(CLI::IsMember({"tsv", "json"}));

  auto* cascade = app.add_subcommand("cascade", "k-cascade of m and the shadow size of the first m k-sets");
  cascade->add_option("--m", o.m)->required();
  cascade->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);

  auto* rank = app.add_subcommand("rank", "0-based squashed-order rank of a set");
  rank->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  rank->add_option("--set", o.set, "e.g. {1,3,4}")->required();

  auto* unrank = app.add_subcommand("unrank", "The k-subset of [n] with a given squashed-order rank");
  unrank->add_option("--r", o.r)->required();
  unrank->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
  unrank->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);

  auto* probe = app.add_subcommand("probe", "Flat antichain check and non-flat equivalents of MSFA (n <= 6)");
  probe->add_option("--n", o.n)->required();
  probe->add_option("--k", o.k);
  probe->add_option("--m", o.m);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.format.empty()) o.format = table->parsed() || verify->parsed() ? "tsv" : "json";

  try {
    const std::uint64_t cap = cap_from_env();
    if (construct->parsed()) return cmd_construct(o, cap, out, false);
    if (closure->parsed()) return cmd_construct(o, cap, out, true);
    if (minimize->parsed()) return cmd_minimize(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (verify->parsed()) return cmd_verify(o, cap, out);
    if (cascade->parsed()) {
      print_json(out, report::cascade_json(cascade_of(parse_bigint(o.m), o.k)));
      return kExitOk;
    }
    if (rank->parsed()) {
      report::Json j;
      const KSet s = parse_kset(o.set, o.n);
      j["set"] = report::kset_json(s);
      j["rank"] = colex_rank(s).str();
      print_json(out, j);
      return kExitOk;
    }
    if (unrank->parsed()) {
      report::Json j;
      j["rank"] = o.r;
      j["set"] = report::kset_json(colex_unrank(parse_bigint(o.r), o.k, o.n));
      print_json(out, j);
      return kExitOk;
    }
    if (probe->parsed()) return cmd_probe(o, out);
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace flatchain::cli
