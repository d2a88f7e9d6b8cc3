#include "polylcm/runner.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "polylcm/analytic.hpp"
#include "polylcm/congruence.hpp"
#include "polylcm/factorizer.hpp"
#include "polylcm/mertens.hpp"
#include "polylcm/parse.hpp"
#include "polylcm/report.hpp"
#include "polylcm/sieve.hpp"
#include "polylcm/valuations.hpp"

namespace polylcm {

namespace {

using nlohmann::json;

struct CommonOpts {
  std::string poly_text;
  u64 x = 10'000;
  std::string format = "json";
  unsigned threads = 0;  // 0: hardware concurrency
  std::string cache_dir;
  bool no_timing = false;
  bool assume_irreducible = false;
  u64 L0 = 0;
};

unsigned effective_threads(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string truncate4(double v) {
  const double t = std::floor(v * 10000.0 + 1e-9) / 10000.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", t);
  return buf;
}

Polynomial load_poly(const CommonOpts& o) {
  Polynomial f = parse_polynomial(o.poly_text);
  switch (check_irreducible(f)) {
    case Irreducibility::accepted:
      break;
    case Irreducibility::rejected:
      throw std::invalid_argument(
          "polynomial is reducible over Q; an irreducible polynomial is "
          "required");
    case Irreducibility::inconclusive:
      if (!o.assume_irreducible)
        throw std::invalid_argument(
            "irreducibility is inconclusive; rerun with --assume-irreducible "
            "to proceed");
      break;
  }
  return f;
}

std::string cache_dir_of(const CommonOpts& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  const char* env = std::getenv("POLYLCM_CACHE");
  return env ? std::string(env) : std::string();
}

struct TableSource {
  FactorizationTable table;
  std::string dir;   // cache directory in use, empty when caching is off
  std::string stem;
  bool loaded = false;
};

TableSource acquire_table(const Polynomial& f, const CommonOpts& o,
                          ArgumentMode mode) {
  const u64 L0 = o.L0 ? o.L0 : default_small_prime_bound(o.x);
  const std::string dir = cache_dir_of(o);
  const std::string canonical = f.canonical_text();
  const std::string stem = cache_stem(canonical, o.x, L0, mode);

  if (!dir.empty()) {
    std::vector<FactorRecord> records;
    bool probabilistic = false;
    if (cache_load(dir, stem, canonical, o.x, L0, records, probabilistic)) {
      return TableSource{FactorizationTable::from_records(
                             f, o.x, std::move(records), L0, mode,
                             probabilistic),
                         dir, stem, true};
    }
  }

  BuildOptions opts;
  opts.mode = mode;
  opts.threads = effective_threads(o.threads);
  opts.small_prime_bound = L0;
  return TableSource{FactorizationTable::build(f, o.x, opts), dir, stem,
                     false};
}

RunReport base_report(const std::string& command, const CommonOpts& o) {
  RunReport report;
  report.version = kToolVersion;
  report.command = command;
  report.x = o.x;
  return report;
}

void store_if_new(const TableSource& src, const RunReport& report) {
  if (src.dir.empty() || src.loaded) return;
  cache_store(src.dir, src.stem, report, src.table);
}

// ---- subcommand payloads -------------------------------------------------

json constants_outputs(unsigned degree) {
  json out;
  const double eps = epsilon_of_degree(degree);
  out["degree"] = degree;
  out["epsilon"] = eps;
  out["one_minus_epsilon"] = 1.0 - eps;
  out["table_value"] = truncate4(1.0 - eps);
  out["delta_paper"] = solve_delta(degree, ConstantMode::paper);
  out["delta_exact"] = solve_delta(degree, ConstantMode::exact);
  out["schedule"] = degree == 2 ? "wu-xi" : "iwaniec+vanilla";
  const auto paper = integral_bound_constant(degree, ConstantMode::paper);
  const auto exact = integral_bound_constant(degree, ConstantMode::exact);
  out["bound_constant_paper"] = paper ? json(*paper) : json(nullptr);
  out["bound_constant_exact"] = exact ? json(*exact) : json(nullptr);
  out["integral_at_delta_paper"] = integrate_c(
      default_schedule(degree), 0.5, out["delta_paper"].get<double>(),
      IntegrationMethod::closed_form);
  out["main_bound_at_delta_paper"] = main_bound_coefficient(
      degree, out["delta_paper"].get<double>());
  return out;
}

json table_outputs(const FactorizationTable& table) {
  json out;
  out["arguments"] = table.candidate_count();
  out["records"] = table.records().size();
  out["distinct_primes"] = table.ledger().distinct_primes();
  const double lq = log_Q(table), ll = log_L(table), lr = log_rad_L(table);
  out["log_Q"] = lq;
  out["log_L"] = ll;
  out["log_rad_L"] = lr;
  const double x = static_cast<double>(table.x());
  out["log_L_over_x"] = ll / x;
  out["log_Q_over_x"] = lq / x;
  out["value_mode"] = table.value_mode();
  return out;
}

// ---- CSV rendering --------------------------------------------------------

std::string csv_single_row(const json& out, const std::vector<std::string>& cols) {
  std::ostringstream os;
  for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (size_t i = 0; i < cols.size(); ++i) {
    if (i) os << ",";
    const json& v = out.at(cols[i]);
    if (v.is_number_float())
      os << num(v.get<double>());
    else if (v.is_null())
      os << "";
    else if (v.is_string())
      os << v.get<std::string>();
    else
      os << v.dump();
  }
  os << "\n";
  return os.str();
}

std::string render(const RunReport& report, const std::string& format) {
  if (format == "json") return report.serialize();

  const json& out = report.outputs;
  const std::string& cmd = report.command;
  if (cmd == "constants")
    return csv_single_row(
        out, {"degree", "epsilon", "one_minus_epsilon", "table_value",
              "delta_paper", "delta_exact", "schedule", "bound_constant_exact"});
  if (cmd == "lcm-growth")
    return csv_single_row(
        out, {"arguments", "records", "log_Q", "log_L", "log_rad_L",
              "log_L_over_x", "log_Q_over_x", "value_mode"});
  if (cmd == "decompose")
    return csv_single_row(out, {"x_b", "x_delta", "log_Q_small",
                                "log_Q_medium", "log_Q_large",
                                "log_Q_very_large", "log_Q", "residual_rel"});
  if (cmd == "density") {
    std::ostringstream os;
    os << "q,flag\n";
    const auto& qs = out.at("record_arguments");
    const auto& flags = out.at("flags");
    for (size_t i = 0; i < qs.size(); ++i)
      os << qs[i].get<u64>() << "," << flags[i].get<int>() << "\n";
    return os.str();
  }
  if (cmd == "mertens") {
    std::ostringstream os;
    os << "x,S,drift\n";
    for (const auto& point : out.at("checkpoints"))
      os << point.at("x").get<u64>() << "," << num(point.at("S").get<double>())
         << "," << num(point.at("drift").get<double>()) << "\n";
    return os.str();
  }
  return report.serialize();
}

// ---- verify ---------------------------------------------------------------

struct VerifyState {
  std::ostringstream log;
  bool ok = true;

  void check(bool pass, const std::string& name, const std::string& detail) {
    log << (pass ? "ok:   " : "FAIL: ") << name;
    if (!detail.empty()) log << " (" << detail << ")";
    log << "\n";
    ok = ok && pass;
  }

  void note(const std::string& name, const std::string& detail) {
    log << "info: " << name << " (" << detail << ")\n";
  }
};

void run_verify(const Polynomial& f, u64 x, unsigned threads,
                VerifyState& vs) {
  // root sets against a full scan
  {
    bool pass = true;
    std::string witness;
    std::mt19937_64 rng(7);
    std::vector<u64> moduli;
    for (u64 m = 1; m <= 60; ++m) moduli.push_back(m);
    for (int i = 0; i < 40; ++i) moduli.push_back(rng() % 9999 + 2);
    for (u64 m : moduli) {
      const auto rs = varrho(f, m);
      std::vector<u64> scan;
      for (u64 r = 0; r < m; ++r)
        if (f.eval_mod(r, m) == 0) scan.push_back(r);
      if (rs.residues != scan) {
        pass = false;
        witness = "m=" + std::to_string(m);
        break;
      }
    }
    vs.check(pass, "varrho completeness vs full scan", witness);
  }

  // multiplicativity on coprime pairs
  {
    bool pass = true;
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60 && pass; ++i) {
      const u64 a = rng() % 999 + 2, b = rng() % 999 + 2;
      if (std::gcd(a, b) != 1) continue;
      pass = varrho(f, a * b).count() == varrho(f, a).count() * varrho(f, b).count();
    }
    vs.check(pass, "rho multiplicativity on coprime moduli", "");
  }

  // Hensel stability on unramified primes
  {
    bool pass = true;
    std::string witness;
    for (u64 p = 2; p <= 101 && pass; ++p) {
      if (!is_prime_u64(p) || !hensel_applicable(f, p)) continue;
      const auto base = roots_mod_prime(f, p);
      u64 pk = p;
      for (unsigned k = 2; pk <= 1'000'000 / p; ++k) {
        pk *= p;
        const auto lifted = hensel_lift(f, p, k);
        if (lifted.count() != base.count()) {
          pass = false;
          witness = "p=" + std::to_string(p) + " k=" + std::to_string(k);
          break;
        }
        for (u64 r : lifted.residues)
          if (f.eval_mod(r, pk) != 0) {
            pass = false;
            witness = "p=" + std::to_string(p);
            break;
          }
      }
    }
    vs.check(pass, "hensel lifts stay simple and complete", witness);
  }

  PrimeRange primes = PrimeRange::up_to(x);

  // AP counts partition pi(x)
  {
    bool pass = true;
    for (u64 m = 1; m <= 24 && pass; ++m) {
      u64 total = 0;
      for (u64 a = 0; a < m; ++a) total += primes.count_in_ap(m, a);
      pass = total == primes.count();
    }
    vs.check(pass, "pi(x; m, a) partitions pi(x)", "");
  }

  // varsigma against a direct scan
  {
    bool pass = true;
    std::string witness;
    std::mt19937_64 rng(13);
    for (int i = 0; i < 25 && pass; ++i) {
      const u64 m = rng() % 9999 + 2;
      u64 direct = 0;
      for (u64 p = 2; p < x; ++p)
        if (primes.is_prime(p) && f.eval_mod(p, m) == 0) ++direct;
      if (varsigma(f, primes, m) != direct) {
        pass = false;
        witness = "m=" + std::to_string(m);
      }
    }
    vs.check(pass, "varsigma equals direct scan", witness);
  }

  // factor table identities
  {
    BuildOptions opts;
    opts.threads = threads;
    const FactorizationTable table = FactorizationTable::build(f, x, opts);

    bool recon = true;
    CompensatedSum direct_log;
    mpz_class product;
    for (const auto& rec : table.records()) {
      product = 1;
      mpz_class pk;
      for (const auto& [p, e] : rec.factors) {
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
        product *= pk;
      }
      if (product != rec.value) recon = false;
      direct_log.add(ExponentLedger::log_of(rec.value));
    }
    vs.check(recon, "records reconstruct |f(q)| exactly", "");

    const double lq = log_Q(table);
    vs.check(std::abs(lq - direct_log.value()) <=
                 1e-9 * std::max(1.0, std::abs(lq)),
             "log Q matches independent accumulation",
             "ledger=" + num(lq) + " direct=" + num(direct_log.value()));

    const double delta = solve_delta(f.degree(), ConstantMode::paper);
    const auto dec = decompose(table, 6.0, std::min(delta, 0.99));
    vs.check(std::abs(dec.total() - lq) <= 1e-9 * std::max(1.0, std::abs(lq)),
             "decomposition partitions log Q", "sum=" + num(dec.total()));

    // lcm oracle at reduced scale
    const u64 oracle_x = std::min<u64>(x, 2000);
    mpz_class lcm_direct = 1, lcm_ledger = 1;
    std::map<mpz_class, u32> lam;
    for (const auto& rec : table.records()) {
      if (rec.q >= oracle_x) break;
      mpz_lcm(lcm_direct.get_mpz_t(), lcm_direct.get_mpz_t(),
              rec.value.get_mpz_t());
      for (const auto& [p, e] : rec.factors) {
        auto& cur = lam[p];
        cur = std::max(cur, static_cast<u32>(e));
      }
    }
    mpz_class pk;
    for (const auto& [p, e] : lam) {
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
      lcm_ledger *= pk;
    }
    vs.check(lcm_direct == lcm_ledger, "lcm oracle at x <= 2000", "");

    // determinism across a different worker count
    BuildOptions opts2 = opts;
    opts2.threads = threads == 1 ? 2 : 1;
    const FactorizationTable table2 = FactorizationTable::build(f, x, opts2);
    const bool same =
        table2.records().size() == table.records().size() &&
        table2.ledger().distinct_primes() == table.ledger().distinct_primes() &&
        log_Q(table2) == lq && log_L(table2) == log_L(table);
    vs.check(same, "table identical across thread counts", "");

    // one-sided Brun-Titchmarsh diagnostic, reported only
    double worst = 0.0;
    const double logx = std::log(static_cast<double>(x));
    for (u64 m = 3; m <= 60; ++m) {
      const auto rs = varrho(f, m);
      const double theta = std::log(static_cast<double>(m)) / logx;
      if (theta >= 0.9) continue;
      for (u64 r : rs.residues) {
        if (std::gcd(r, m) != 1) continue;
        const double count =
            static_cast<double>(primes.count_in_ap(m, r));
        const double bound = 2.0 / (1.0 - theta) *
                             static_cast<double>(x) /
                             (static_cast<double>(totient(m)) * logx);
        if (bound > 0) worst = std::max(worst, count / bound);
      }
    }
    vs.note("brun-titchmarsh headroom (count/bound, diagnostic)",
            "max=" + num(worst));
  }
}

// ---- dispatch --------------------------------------------------------------

std::vector<u64> parse_u64_list(const std::string& text) {
  std::vector<u64> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stoull(token));
  }
  return out;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact growth of lcm{f(p) : p < x} and factor statistics"};
  app.name("polylcm");
  app.require_subcommand(1);

  CommonOpts common;
  unsigned degree = 1;
  std::string args_mode = "primes";
  double B = 6.0;
  double delta = -1.0;
  bool eh = false;
  double exponent = -1.0;
  std::string gpd_base = "argument";
  std::string xs_text;
  u64 lambda_bound = 0;

  auto add_common = [&](CLI::App* sub, bool with_poly, bool with_x) {
    if (with_poly)
      sub->add_option("--poly", common.poly_text,
                      "polynomial: \"1,0,1\" or \"x^2+1\"")
          ->required();
    if (with_x) sub->add_option("--x", common.x, "argument bound x");
    sub->add_option("--format", common.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", common.threads,
                    "worker threads (0 = hardware)");
    sub->add_option("--cache", common.cache_dir,
                    "cache directory (or POLYLCM_CACHE)");
    sub->add_flag("--no-timing", common.no_timing,
                  "omit the timing field from the report");
    sub->add_flag("--assume-irreducible", common.assume_irreducible,
                  "accept a polynomial whose irreducibility is inconclusive");
    sub->add_option("--L0", common.L0,
                    "small-prime sieve bound override (0 = auto)");
  };

  CLI::App* constants = app.add_subcommand(
      "constants", "analytic thresholds and Table-row values for a degree");
  constants->add_option("--degree", degree, "polynomial degree d")
      ->required()
      ->check(CLI::Range(1u, 64u));
  add_common(constants, false, false);

  CLI::App* lcm_growth = app.add_subcommand(
      "lcm-growth", "log Q, log L, log rad L from the exact factor table");
  add_common(lcm_growth, true, true);
  lcm_growth->add_option("--args", args_mode, "primes|integers")
      ->check(CLI::IsMember({"primes", "integers"}));

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "split log Q by the prime-size regimes");
  add_common(decompose_cmd, true, true);
  decompose_cmd->add_option("--B", B, "logarithmic cut exponent (default 6)");
  decompose_cmd->add_option("--delta", delta,
                            "regime boundary exponent (default: solved)");
  decompose_cmd->add_flag(
      "--eh", eh, "accept any delta < 1 (conditional on Elliott-Halberstam)");

  CLI::App* density = app.add_subcommand(
      "density", "arguments whose f(q) has a prime factor above q^e");
  add_common(density, true, true);
  density->add_option("--exponent", exponent,
                      "threshold exponent e (default 1 - epsilon(d))");
  density->add_option("--base", gpd_base,
                      "argument (q^e) or global (x^e) threshold")
      ->check(CLI::IsMember({"argument", "global"}));

  CLI::App* mertens_cmd = app.add_subcommand(
      "mertens", "Mertens-type sums, drift toward the constant, Li comparison");
  add_common(mertens_cmd, true, true);
  mertens_cmd->add_option("--xs", xs_text,
                          "comma-separated checkpoint list (overrides --x)");
  mertens_cmd->add_option("--lambda-bound", lambda_bound,
                          "also sum varsigma(m) Lambda(m) for m below this");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the invariant suite at a configured scale");
  add_common(verify, true, true);

  std::vector<const char*> argv;
  argv.push_back("polylcm");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  }

  const auto started = std::chrono::steady_clock::now();
  auto finish = [&](RunReport& report, const std::string& format) {
    if (!common.no_timing) {
      const auto elapsed = std::chrono::steady_clock::now() - started;
      report.timing_ms =
          std::chrono::duration<double, std::milli>(elapsed).count();
    }
    return CliResult{0, render(report, format)};
  };

  try {
    if (constants->parsed()) {
      RunReport report = base_report("constants", common);
      report.x = 0;
      report.config["degree"] = degree;
      report.outputs = constants_outputs(degree);
      return finish(report, common.format);
    }

    if (lcm_growth->parsed()) {
      const Polynomial f = load_poly(common);
      const ArgumentMode mode = args_mode == "integers"
                                    ? ArgumentMode::integers
                                    : ArgumentMode::primes;
      TableSource src = acquire_table(f, common, mode);
      RunReport report = base_report("lcm-growth", common);
      report.poly = f.canonical_text();
      report.config["L0"] = src.table.small_prime_bound();
      report.config["args"] = args_mode;
      report.outputs = table_outputs(src.table);
      report.certification =
          src.table.probabilistic() ? "probabilistic" : "deterministic";
      store_if_new(src, report);
      return finish(report, common.format);
    }

    if (decompose_cmd->parsed()) {
      const Polynomial f = load_poly(common);
      if (eh) {
        if (delta <= 0.0 || delta >= 1.0)
          throw std::invalid_argument(
              "--eh requires an explicit --delta in (0, 1)");
      } else if (delta < 0.0) {
        delta = solve_delta(f.degree(), ConstantMode::paper);
      }
      TableSource src = acquire_table(f, common, ArgumentMode::primes);
      RunReport report = base_report("decompose", common);
      report.poly = f.canonical_text();
      report.config["L0"] = src.table.small_prime_bound();
      report.config["B"] = B;
      report.config["delta"] = delta;
      report.config["eh"] = eh;
      if (eh) report.config["mode_tag"] = "conditional-on-EH";

      const Decomposition dec = decompose(src.table, B, delta);
      const double lq = log_Q(src.table);
      json out = table_outputs(src.table);
      out["x_b"] = dec.x_b;
      out["x_delta"] = dec.x_delta;
      out["log_Q_small"] = dec.log_q_small;
      out["log_Q_medium"] = dec.log_q_medium;
      out["log_Q_large"] = dec.log_q_large;
      out["log_Q_very_large"] = dec.log_q_very_large;
      out["residual_rel"] =
          std::abs(dec.total() - lq) / std::max(1e-300, std::abs(lq));
      report.outputs = std::move(out);
      report.certification =
          src.table.probabilistic() ? "probabilistic" : "deterministic";
      store_if_new(src, report);
      return finish(report, common.format);
    }

    if (density->parsed()) {
      const Polynomial f = load_poly(common);
      if (exponent < 0.0) exponent = 1.0 - epsilon_of_degree(f.degree());
      const GpdBase base = gpd_base == "global" ? GpdBase::global
                                                : GpdBase::argument;
      TableSource src = acquire_table(f, common, ArgumentMode::primes);
      RunReport report = base_report("density", common);
      report.poly = f.canonical_text();
      report.config["L0"] = src.table.small_prime_bound();
      report.config["exponent"] = exponent;
      report.config["base"] = gpd_base;

      const GpdStats stats =
          greatest_prime_divisor_stats(src.table, exponent, base);
      json out;
      out["N"] = stats.satisfied;
      out["fraction"] = stats.fraction;
      out["exponent"] = exponent;
      out["base"] = gpd_base;
      out["arguments"] = src.table.candidate_count();
      out["records"] = src.table.records().size();
      json qs = json::array(), flags = json::array();
      for (size_t i = 0; i < src.table.records().size(); ++i) {
        qs.push_back(src.table.records()[i].q);
        flags.push_back(static_cast<int>(stats.flags[i]));
      }
      if (src.table.records().size() <= 10'000 || common.format == "csv") {
        out["record_arguments"] = std::move(qs);
        out["flags"] = std::move(flags);
      }
      report.outputs = std::move(out);
      report.certification =
          src.table.probabilistic() ? "probabilistic" : "deterministic";
      store_if_new(src, report);
      return finish(report, common.format);
    }

    if (mertens_cmd->parsed()) {
      const Polynomial f = load_poly(common);
      std::vector<u64> xs =
          xs_text.empty() ? std::vector<u64>{common.x} : parse_u64_list(xs_text);
      const unsigned threads = effective_threads(common.threads);

      RunReport report = base_report("mertens", common);
      report.poly = f.canonical_text();
      report.x = xs.back();
      report.config["li_lower_limit"] = 2;

      const auto series = drift_series(f, xs, threads);
      json checkpoints = json::array();
      for (const auto& point : series)
        checkpoints.push_back(
            {{"x", point.x}, {"S", point.sum}, {"drift", point.drift}});
      json out;
      out["checkpoints"] = std::move(checkpoints);
      out["R_empirical_estimate"] = series.back().drift;
      if (xs.back() >= 3) {
        const LiComparison cmp = root_count_vs_li(f, xs.back(), threads);
        out["li_comparison"] = {
            {"sum_rho", cmp.sum_rho}, {"li", cmp.li}, {"ratio", cmp.ratio}};
      }
      if (lambda_bound >= 2) {
        PrimeRange range = PrimeRange::up_to(xs.back());
        out["lambda_weighted_sum"] = {
            {"bound", lambda_bound},
            {"value", lambda_weighted_varsigma_sum(f, range, lambda_bound)}};
      }
      report.outputs = std::move(out);
      return finish(report, common.format);
    }

    if (verify->parsed()) {
      const Polynomial f = load_poly(common);
      VerifyState vs;
      run_verify(f, common.x, effective_threads(common.threads), vs);
      vs.log << (vs.ok ? "verify: all checks passed\n"
                       : "verify: FAILURES present\n");
      return {vs.ok ? 0 : 3, vs.log.str()};
    }
  } catch (const std::invalid_argument& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  } catch (const resource_limit_error& e) {
    return {2, std::string("resource limit: ") + e.what() + "\n"};
  } catch (const factorization_error& e) {
    return {2, std::string("resource limit: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {3, std::string("internal error: ") + e.what() + "\n"};
  }

  return {1, "error: no subcommand\n"};
}

}  // namespace polylcm
