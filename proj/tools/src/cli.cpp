// Copyright 2026 The Hardy-Heisenberg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hardy_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hardy/constants.hpp"
#include "hardy/decomposition.hpp"
#include "hardy/error.hpp"
#include "hardy/functional.hpp"
#include "hardy/parallel.hpp"
#include "hardy/verify.hpp"
#include "hardy_cli/json_io.hpp"

namespace hardy::cli {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Flag catalogue.

struct FlagSpec {
  const char* name;
  const char* help;
  bool is_switch;
};

constexpr FlagSpec kFlags[] = {
    {"n", "Dimension n of H^n (default 1)", false},
    {"p", "Integrability exponent p >= 1", false},
    {"s", "Fractional order s in (0, 1)", false},
    {"alpha", "Weight exponent alpha >= 0", false},
    {"rho", "Side parameter of the box Q(rho) (default 1)", false},
    {"r", "Base radius of the whole-space cells (default 1)", false},
    {"m", "Contraction exponent (default: the minimal admissible m)", false},
    {"j", "Cell scale (with --sweep: largest scale or scale span)", false},
    {"k", "Cell class (default 1)", false},
    {"i", "Subcube rank within the class (default 0)", false},
    {"l", "t-interval index (with --sweep: largest |l|)", false},
    {"samples", "Monte Carlo sample count", false},
    {"seed", "Random seed (required for sampling commands)", false},
    {"budget", "Objective evaluations of the optimizer (default 40)", false},
    {"out", "Output file (JSON is overwritten, CSV is appended)", false},
    {"format", "Output format: json or csv (default json)", false},
    {"no-timestamp", "Omit the timestamp field", true},
    {"threads", "Worker threads (default: machine parallelism)", false},
    {"config", "JSON file whose keys mirror the flags", false},
    {"bump", "Product bump c_1,..,c_{2n+1}:r_1,..,r_{2n+1}", false},
    {"domain", "halfspace, whole or whole_z_weight (default halfspace)", false},
    {"regime", "halfspace, subcritical or supercritical (default: inferred)",
     false},
    {"points", "Number of points or pairs (command specific)", false},
    {"sweep", "Sweep a family of cells instead of a single cell", true},
};

const FlagSpec& flag_spec(const std::string& name) {
  for (const FlagSpec& f : kFlags) {
    if (name == f.name) return f;
  }
  throw UsageError("internal: unknown flag " + name);
}

const std::vector<std::string> kOutputFlags = {"out", "format", "no-timestamp",
                                               "config"};
const std::vector<std::string> kSamplingFlags = {"seed", "samples", "threads"};
const std::vector<std::string> kParamFlags = {"n", "p", "s", "alpha"};

// ---------------------------------------------------------------------------
// Option values: command line first, then the config file, then defaults.
// Every value a command reads is recorded in the embedded config (except the
// thread count, which never changes results, and the config path itself).

class Options {
 public:
  void set_raw(const std::string& key, std::string value) {
    raw_[key] = std::move(value);
  }
  bool has(const std::string& key) const { return raw_.count(key) > 0; }

  std::optional<double> opt_double(const std::string& key) {
    if (!has(key)) return std::nullopt;
    const double v = parse_double(key, raw_.at(key));
    config_[key] = v;
    return v;
  }
  double get_double(const std::string& key, double fallback) {
    const double v = has(key) ? parse_double(key, raw_.at(key)) : fallback;
    config_[key] = v;
    return v;
  }
  double require_double(const std::string& key) {
    if (!has(key)) throw UsageError("--" + key + " is required");
    return *opt_double(key);
  }

  std::optional<std::int64_t> opt_int(const std::string& key) {
    if (!has(key)) return std::nullopt;
    const std::int64_t v = parse_int(key, raw_.at(key));
    config_[key] = v;
    return v;
  }
  std::int64_t get_int(const std::string& key, std::int64_t fallback) {
    const std::int64_t v = has(key) ? parse_int(key, raw_.at(key)) : fallback;
    config_[key] = v;
    return v;
  }

  std::uint64_t require_seed() {
    if (!has("seed")) throw UsageError("--seed is required for this command");
    const std::string& text = raw_.at("seed");
    std::uint64_t v = 0;
    std::size_t used = 0;
    try {
      if (!text.empty() && text[0] == '-') throw std::invalid_argument("neg");
      v = std::stoull(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      throw UsageError("--seed expects a non-negative integer, got '" + text +
                       "'");
    }
    config_["seed"] = v;
    return v;
  }

  std::optional<std::string> opt_string(const std::string& key) {
    if (!has(key)) return std::nullopt;
    config_[key] = raw_.at(key);
    return raw_.at(key);
  }
  std::string get_string(const std::string& key, const std::string& fallback) {
    const std::string v = has(key) ? raw_.at(key) : fallback;
    config_[key] = v;
    return v;
  }
  std::string require_string(const std::string& key) {
    if (!has(key)) throw UsageError("--" + key + " is required");
    return *opt_string(key);
  }

  bool get_switch(const std::string& key) {
    const bool v = has(key);
    config_[key] = v;
    return v;
  }

  int threads() const {
    if (!has("threads")) return resolve_threads(0);
    const std::int64_t t = parse_int("threads", raw_.at("threads"));
    if (t < 1 || t > 1024) throw UsageError("--threads must be in [1, 1024]");
    return int(t);
  }

  const json& config() const { return config_; }

 private:
  static double parse_double(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(v)) {
      throw UsageError("--" + key + " expects a finite real, got '" + text +
                       "'");
    }
    return v;
  }
  static std::int64_t parse_int(const std::string& key,
                                const std::string& text) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      // Accept integral reals such as 1e6 or 100000.0.
      double d = 0.0;
      try {
        d = std::stod(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != text.size() || d != std::floor(d) ||
          std::abs(d) > 9.0e15) {
        throw UsageError("--" + key + " expects an integer, got '" + text +
                         "'");
      }
      v = static_cast<long long>(d);
    }
    return v;
  }

  std::map<std::string, std::string> raw_;
  json config_ = json::object();
};

// Folds a JSON config file into the options that were not given as flags.
void apply_config(const std::string& path, const std::set<std::string>& allowed,
                  Options& opt) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " +
                     e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key) || key == "config") {
      throw UsageError("config key '" + key + "' is not a flag of this command");
    }
    if (opt.has(key)) continue;  // flags override file values
    if (flag_spec(key).is_switch) {
      if (!value.is_boolean()) {
        throw UsageError("config key '" + key + "' must be a boolean");
      }
      if (value.get<bool>()) opt.set_raw(key, "true");
    } else if (value.is_string()) {
      opt.set_raw(key, value.get<std::string>());
    } else if (value.is_number()) {
      opt.set_raw(key, value.dump());
    } else {
      throw UsageError("config key '" + key + "' must be a number or string");
    }
  }
}

// ---------------------------------------------------------------------------
// Shared resolution helpers.

struct Outcome {
  Outcome() = default;
  Outcome(json r, bool ok) : result(std::move(r)), passed(ok) {}

  json result;
  bool passed = true;
  bool inconclusive = false;
  std::string inconclusive_reason;
  // Rows for CSV output (commands that support it).
  std::vector<std::vector<std::string>> csv_rows;
};

const std::vector<std::string> kCsvColumns = {
    "label",       "n",        "p",          "s",           "alpha",
    "domain",      "lhs",      "lhs_se",     "seminorm",    "seminorm_se",
    "quotient",    "quotient_se", "C_final", "margin_ratio", "seed",
    "samples"};

std::string csv_number(double v) {
  if (!std::isfinite(v)) return "";
  // Shortest representation that round-trips.
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

HardyParams read_params(Options& opt) {
  HardyParams params;
  params.n = int(opt.get_int("n", 1));
  params.p = opt.require_double("p");
  params.s = opt.require_double("s");
  params.alpha = opt.require_double("alpha");
  params.validate();
  return params;
}

int read_n(Options& opt) {
  const std::int64_t n = opt.get_int("n", 1);
  GroupParams check(int(std::clamp<std::int64_t>(n, -1, 1 << 20)));
  return int(n);
}

McConfig read_mc(Options& opt, std::int64_t default_samples) {
  McConfig cfg;
  cfg.samples = opt.get_int("samples", default_samples);
  cfg.seed = opt.require_seed();
  cfg.threads = opt.threads();
  cfg.validate();
  return cfg;
}

// The inequality a run is compared against: --regime when given, otherwise
// the half-space inequality for the half-space domain and the whole-space
// regime the parameters satisfy for the whole-space domains.
Regime resolve_regime(Options& opt, const HardyParams& params,
                      std::optional<LpDomain> domain) {
  if (auto name = opt.opt_string("regime")) return parse_regime(*name);
  const RegimeFlags flags = classify(params);
  if (domain && *domain == LpDomain::kHalfSpaceX1) return Regime::kHalfSpace;
  if (domain) {
    if (flags.subcritical) return Regime::kSubcritical;
    if (flags.supercritical) return Regime::kSupercritical;
    throw RegimeError(
        "parameters satisfy neither sp + alpha < Q - 2 nor sp + alpha > Q - 2");
  }
  const int count = int(flags.half_space) + int(flags.subcritical) +
                    int(flags.supercritical);
  if (count == 0) {
    throw RegimeError("parameters satisfy none of the three regimes");
  }
  if (count > 1) {
    throw UsageError("parameters satisfy several regimes; pass --regime");
  }
  if (flags.half_space) return Regime::kHalfSpace;
  return flags.subcritical ? Regime::kSubcritical : Regime::kSupercritical;
}

SupportDomain support_domain_for(LpDomain d) {
  return d == LpDomain::kHalfSpaceX1 ? SupportDomain::kHalfSpaceX1
                                     : SupportDomain::kAwayFromAxis;
}

TestFunction read_bump(Options& opt, int n, LpDomain domain) {
  TestFunction f = parse_bump(opt.require_string("bump"),
                              support_domain_for(domain));
  if (f.n() != n) {
    throw UsageError("--bump has " + std::to_string(2 * f.n() + 1) +
                     " coordinates per block but --n " + std::to_string(n) +
                     " needs " + std::to_string(2 * n + 1));
  }
  return f;
}

// --m when given, otherwise m_min of the regime (which requires p, s, alpha).
int resolve_m(Options& opt, Regime regime, int n) {
  if (auto m = opt.opt_int("m")) {
    if (*m < 1 || *m > 100000) throw UsageError("--m must be in [1, 100000]");
    if (opt.has("p") || opt.has("s") || opt.has("alpha")) {
      HardyParams params = read_params(opt);
      if (params.n != n) throw UsageError("inconsistent --n");
      return contraction_schedule(params, regime, int(*m)).m;
    }
    return int(*m);
  }
  if (!(opt.has("p") && opt.has("s") && opt.has("alpha"))) {
    throw UsageError("pass either --m or all of --p --s --alpha");
  }
  const HardyParams params = read_params(opt);
  return contraction_schedule(params, regime).m_min;
}

// ---------------------------------------------------------------------------
// Commands.

Outcome run_verify_group(Options& opt) {
  const int n = read_n(opt);
  const std::int64_t samples = opt.get_int("samples", 100000);
  const std::uint64_t seed = opt.require_seed();
  const GroupCheckReport rep = verify_group(n, samples, seed, opt.threads());
  return {json(rep), rep.passed};
}

Outcome run_verify_geometry(Options& opt) {
  const int n = read_n(opt);
  const std::int64_t omega = opt.get_int("samples", 1000);
  const std::int64_t half = opt.get_int("points", 100);
  const std::uint64_t seed = opt.require_seed();
  if (omega < 0 || half < 0) throw UsageError("counts must be non-negative");
  const DistanceCheckReport rep = verify_distances(n, half, omega, seed);
  return {json(rep), rep.passed};
}

Outcome run_verify_decomposition(Options& opt) {
  const int n = read_n(opt);
  const double rho = opt.get_double("rho", 1.0);
  const double r = opt.get_double("r", 1.0);
  const std::int64_t samples = opt.get_int("samples", 100000);
  const std::int64_t pairs = opt.get_int("points", 100);
  const std::uint64_t seed = opt.require_seed();
  if (pairs < 0 || pairs > 1000000) {
    throw UsageError("--points must be in [0, 1000000]");
  }
  const PartitionReport half =
      partition_check_half(n, rho, samples, seed, int(pairs));
  const PartitionReport whole = partition_check_whole(
      n, r, 16.0 * r, 16.0 * r * r, samples, seed, int(pairs));
  json result = {{"half_space", half},
                 {"whole_space", whole},
                 {"whole_space_z_max", 16.0 * r},
                 {"whole_space_t_max", 16.0 * r * r},
                 {"passed", half.passed && whole.passed}};
  return {result, half.passed && whole.passed};
}

Outcome run_verify_lemma21(Options& opt) {
  const int n = read_n(opt);
  const double rho = opt.get_double("rho", 1.0);
  const int m = resolve_m(opt, Regime::kHalfSpace, n);
  const std::int64_t samples = opt.get_int("samples", 10000);
  const std::uint64_t seed = opt.require_seed();
  const int threads = opt.threads();
  if (opt.get_switch("sweep")) {
    const LemmaSweep sweep =
        sweep_lemma21(n, int(opt.get_int("j", 3)), opt.get_int("l", 8), m, rho,
                      samples, seed, threads);
    return {json(sweep), sweep.passed};
  }
  const std::int64_t k = opt.get_int("k", 1);
  const std::int64_t i = opt.get_int("i", 0);
  if (i < 0) throw UsageError("--i must be >= 0");
  const GeometryReport rep = verify_lemma21(
      n, int(opt.get_int("j", 0)), int(k), std::uint64_t(i),
      opt.get_int("l", 0), m, rho, samples, seed, threads);
  return {json(rep), rep.passed};
}

Outcome run_verify_lemma3x(Options& opt, Direction direction) {
  const int n = read_n(opt);
  const double r = opt.get_double("r", 1.0);
  const Regime regime = direction == Direction::kOutward
                            ? Regime::kSubcritical
                            : Regime::kSupercritical;
  const int m = resolve_m(opt, regime, n);
  const std::int64_t samples = opt.get_int("samples", 10000);
  const std::uint64_t seed = opt.require_seed();
  const int threads = opt.threads();
  if (opt.get_switch("sweep")) {
    const LemmaSweep sweep =
        sweep_lemma3x(n, int(opt.get_int("j", 4)), opt.get_int("l", 4), m, r,
                      direction, samples, seed, threads);
    return {json(sweep), sweep.passed};
  }
  const int j_default = direction == Direction::kOutward ? 0 : m;
  const GeometryReport rep =
      verify_lemma3x(n, int(opt.get_int("j", j_default)), opt.get_int("l", 0),
                     m, r, direction, samples, seed, threads);
  return {json(rep), rep.passed};
}

Outcome run_verify_pointwise(Options& opt) {
  const HardyParams params = read_params(opt);
  const LpDomain domain = parse_lp_domain(opt.get_string("domain", "halfspace"));
  const Regime regime = resolve_regime(opt, params, domain);
  require_regime(params, regime);
  const int m = resolve_m(opt, regime, params.n);
  const TestFunction f = read_bump(opt, params.n, domain);
  const ExceptionalFamily family =
      regime == Regime::kHalfSpace
          ? ExceptionalFamily::half_space(opt.get_double("rho", 1.0), params.n, m)
          : ExceptionalFamily::whole_space(opt.get_double("r", 1.0), params.n, m,
                                           direction_for(regime));
  const std::int64_t points = opt.get_int("points", 50);
  if (points < 1 || points > 100000) {
    throw UsageError("--points must be in [1, 100000]");
  }
  const McConfig cfg = read_mc(opt, 20000);
  const PointwiseSweep sweep = sweep_pointwise(
      f, params, regime, m, family, int(points), int(20 * points), cfg);
  Outcome out{json(sweep), sweep.passed};
  out.result["regime"] = to_string(regime);
  out.result["m"] = m;
  if (!sweep.complete) {
    out.inconclusive = true;
    out.inconclusive_reason =
        "fewer conclusive non-members than requested were found";
  }
  return out;
}

Outcome run_constants(Options& opt) {
  const HardyParams params = read_params(opt);
  std::optional<LpDomain> domain;
  if (auto d = opt.opt_string("domain")) domain = parse_lp_domain(*d);
  const Regime regime = resolve_regime(opt, params, domain);
  std::optional<int> m;
  if (auto mm = opt.opt_int("m")) {
    if (*mm < 1 || *mm > 100000) throw UsageError("--m must be in [1, 100000]");
    m = int(*mm);
  }
  const ContractionSchedule sched = contraction_schedule(params, regime, m);
  json result = sched;
  result["params"] = params;
  result["regime_flags"] = {{"half_space", classify(params).half_space},
                            {"subcritical", classify(params).subcritical},
                            {"supercritical", classify(params).supercritical}};
  return {result, true};
}

std::vector<std::string> csv_row(const std::string& label,
                                 const HardyParams& params, LpDomain domain,
                                 const QuotientEstimate& q, double C_final,
                                 double margin_ratio, const McConfig& cfg) {
  return {label,
          std::to_string(params.n),
          csv_number(params.p),
          csv_number(params.s),
          csv_number(params.alpha),
          to_string(domain),
          csv_number(q.lhs.mean),
          csv_number(q.lhs.std_error),
          csv_number(q.seminorm.truncated.mean),
          csv_number(q.seminorm.truncated.std_error),
          csv_number(q.quotient.mean),
          csv_number(q.quotient.std_error),
          csv_number(C_final),
          csv_number(margin_ratio),
          std::to_string(cfg.seed),
          std::to_string(cfg.samples)};
}

// Quotient estimate plus the comparison with C_final; shared by `estimate`
// and `report`.
Outcome estimate_outcome(const TestFunction& f, const std::string& label,
                         const HardyParams& params, LpDomain domain,
                         Regime regime, const McConfig& cfg) {
  const ContractionSchedule sched = contraction_schedule(params, regime);
  Outcome out;
  out.result = {{"regime", to_string(regime)},
                {"domain", to_string(domain)},
                {"C_final", sched.C_final},
                {"label", label}};
  try {
    const QuotientEstimate q = hardy_quotient(f, params, domain, cfg);
    const double upper = q.quotient.mean + 3.0 * q.quotient.std_error;
    const double margin = upper / sched.C_final;
    out.result["estimate"] = q;
    out.result["quotient_upper"] = upper;
    out.result["margin_ratio"] = margin;
    out.result["within_bound"] = upper <= sched.C_final;
    out.passed = upper <= sched.C_final;
    out.csv_rows.push_back(
        csv_row(label, params, domain, q, sched.C_final, margin, cfg));
  } catch (const UndefinedQuotientError& e) {
    out.inconclusive = true;
    out.inconclusive_reason = e.what();
  }
  return out;
}

Outcome run_estimate(Options& opt) {
  const HardyParams params = read_params(opt);
  const LpDomain domain = parse_lp_domain(opt.get_string("domain", "halfspace"));
  const Regime regime = resolve_regime(opt, params, domain);
  const std::string spec = opt.require_string("bump");
  const TestFunction f = read_bump(opt, params.n, domain);
  const McConfig cfg = read_mc(opt, 1000000);
  return estimate_outcome(f, spec, params, domain, regime, cfg);
}

// Parameter box around the start bump: centers move by up to half a radius,
// radii vary in [0.5, 1.5] times the start radius, and the coordinate that
// keeps the support admissible is shrunk until every candidate stays
// admissible.
BumpFamily family_around(const TestFunction& f, SupportDomain domain) {
  const int n = f.n();
  const std::size_t dim = 2 * std::size_t(n) + 1;
  const std::vector<double>& start = f.family_params();
  BumpFamily fam;
  fam.n = n;
  fam.domain = domain;
  fam.start = start;
  fam.lower.resize(2 * dim);
  fam.upper.resize(2 * dim);
  fam.step.resize(2 * dim);
  for (std::size_t u = 0; u < dim; ++u) {
    const double r = start[dim + u];
    fam.lower[u] = start[u] - 0.5 * r;
    fam.upper[u] = start[u] + 0.5 * r;
    fam.lower[dim + u] = 0.5 * r;
    fam.upper[dim + u] = 1.5 * r;
  }
  auto shrink = [&](std::size_t u) {
    const double r = start[dim + u];
    const double margin = std::abs(start[u]) - r;  // > 0 for admissible starts
    const double dc = std::min(0.5 * r, margin / 3.0);
    fam.lower[u] = start[u] - dc;
    fam.upper[u] = start[u] + dc;
    fam.upper[dim + u] = r + std::min(0.5 * r, margin / 3.0);
  };
  if (domain == SupportDomain::kHalfSpaceX1) {
    shrink(0);
  } else if (domain == SupportDomain::kAwayFromAxis) {
    std::size_t best = 0;
    for (std::size_t u = 1; u + 1 < dim; ++u) {
      if (std::abs(start[u]) - start[dim + u] >
          std::abs(start[best]) - start[dim + best]) {
        best = u;
      }
    }
    shrink(best);
  }
  for (std::size_t u = 0; u < 2 * dim; ++u) {
    fam.step[u] = 0.5 * (fam.upper[u] - fam.lower[u]);
  }
  return fam;
}

Outcome run_optimize(Options& opt) {
  const HardyParams params = read_params(opt);
  const LpDomain domain = parse_lp_domain(opt.get_string("domain", "halfspace"));
  const Regime regime = resolve_regime(opt, params, domain);
  const std::string spec = opt.require_string("bump");
  const TestFunction f = read_bump(opt, params.n, domain);
  const std::int64_t budget = opt.get_int("budget", 40);
  if (budget < 0 || budget > 100000) {
    throw UsageError("--budget must be in [0, 100000]");
  }
  const McConfig cfg = read_mc(opt, 200000);
  const BumpFamily fam = family_around(f, support_domain_for(domain));
  json context = {{"regime", to_string(regime)},
                  {"domain", to_string(domain)},
                  {"family_lower", fam.lower},
                  {"family_upper", fam.upper}};
  Outcome out;
  try {
    const OptimizeResult res =
        optimize_quotient(fam, params, domain, regime, int(budget), cfg);
    out = Outcome(json(res), !res.red_flag);
    out.csv_rows.push_back(csv_row(spec, params, domain, res.best,
                                   res.C_final, res.margin_ratio, cfg));
  } catch (const UndefinedQuotientError& e) {
    // No candidate had a resolved quotient: nothing was refuted.
    out = Outcome(json::object(), true);
    out.inconclusive = true;
    out.inconclusive_reason = e.what();
  }
  out.result.update(context);
  return out;
}

Outcome run_report(Options& opt) {
  const HardyParams params = read_params(opt);
  const LpDomain domain = parse_lp_domain(opt.get_string("domain", "halfspace"));
  const Regime regime = resolve_regime(opt, params, domain);
  const std::string spec = opt.require_string("bump");
  const TestFunction f = read_bump(opt, params.n, domain);
  const McConfig cfg = read_mc(opt, 1000000);
  const ContractionSchedule sched = contraction_schedule(params, regime);

  Outcome out = estimate_outcome(f, spec, params, domain, regime, cfg);
  out.result["constants"] = sched;

  // A small sweep of the cell-comparison lemma behind the regime.
  const std::int64_t cell_samples = 1000;
  LemmaSweep sweep;
  if (regime == Regime::kHalfSpace) {
    sweep = sweep_lemma21(params.n, std::min(2, max_half_scale(params.n)), 2,
                          sched.m, opt.get_double("rho", 1.0), cell_samples,
                          cfg.seed, cfg.threads);
  } else {
    sweep = sweep_lemma3x(params.n, 2, 2, sched.m, opt.get_double("r", 1.0),
                          direction_for(regime), cell_samples, cfg.seed,
                          cfg.threads);
  }
  out.result["geometry"] = {{"lemma", sweep.lemma},
                            {"cells", sweep.cells},
                            {"failed_cells", sweep.failed_cells},
                            {"violations", sweep.violations},
                            {"max_gauge_ratio", sweep.max_gauge_ratio},
                            {"gauge_bound", sweep.gauge_bound},
                            {"min_measure_ratio", sweep.min_measure_ratio},
                            {"samples_per_cell", cell_samples},
                            {"passed", sweep.passed}};
  out.passed = out.passed && sweep.passed;
  return out;
}

// ---------------------------------------------------------------------------
// Dispatch.

struct Command {
  std::string path;  // e.g. "verify group"
  std::string help;
  std::vector<std::string> flags;
  bool csv = false;
  std::function<Outcome(Options&)> run;
};

std::vector<std::string> join(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Command> commands() {
  const std::vector<std::string> lemma3 = {"n", "p", "s", "alpha", "r",
                                           "m", "j", "l", "sweep"};
  return {
      {"verify group", "Group-law, gauge and volume checks",
       join({{"n"}, kSamplingFlags, kOutputFlags}), false, run_verify_group},
      {"verify geometry", "Distance to {x_1 = 0} and the Omega bound",
       join({{"n", "points"}, kSamplingFlags, kOutputFlags}), false,
       run_verify_geometry},
      {"verify decomposition", "Partition checks of both cell families",
       join({{"n", "rho", "r", "points"}, kSamplingFlags, kOutputFlags}), false,
       run_verify_decomposition},
      {"verify lemma21", "Half-space cell comparison",
       join({{"n", "p", "s", "alpha", "rho", "m", "j", "k", "i", "l", "sweep"},
             kSamplingFlags, kOutputFlags}),
       false, run_verify_lemma21},
      {"verify lemma31", "Outward whole-space cell comparison",
       join({lemma3, kSamplingFlags, kOutputFlags}), false,
       [](Options& o) { return run_verify_lemma3x(o, Direction::kOutward); }},
      {"verify lemma32", "Inward whole-space cell comparison",
       join({lemma3, kSamplingFlags, kOutputFlags}), false,
       [](Options& o) { return run_verify_lemma3x(o, Direction::kInward); }},
      {"verify pointwise", "Pointwise property at non-members of F or G",
       join({kParamFlags,
             {"rho", "r", "m", "bump", "domain", "regime", "points"},
             kSamplingFlags, kOutputFlags}),
       false, run_verify_pointwise},
      {"constants", "Contraction schedule and final constant",
       join({kParamFlags, {"m", "regime", "domain"}, kOutputFlags}), false,
       run_constants},
      {"estimate", "Monte Carlo Hardy quotient of one bump",
       join({kParamFlags, {"bump", "domain", "regime"}, kSamplingFlags,
             kOutputFlags}),
       true, run_estimate},
      {"optimize", "Quotient maximization around a start bump",
       join({kParamFlags, {"bump", "domain", "regime", "budget"},
             kSamplingFlags, kOutputFlags}),
       true, run_optimize},
      {"report", "Constants, quotient estimate and a geometry sweep",
       join({kParamFlags, {"bump", "domain", "regime", "rho", "r"},
             kSamplingFlags, kOutputFlags}),
       true, run_report},
  };
}

std::string timestamp_now() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_csv(const Outcome& outcome, const std::optional<std::string>& path,
               std::ostream& out) {
  auto emit = [&](std::ostream& os, bool header) {
    if (header) {
      for (std::size_t c = 0; c < kCsvColumns.size(); ++c) {
        os << (c ? "," : "") << kCsvColumns[c];
      }
      os << "\n";
    }
    for (const auto& row : outcome.csv_rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        os << (c ? "," : "") << csv_escape(row[c]);
      }
      os << "\n";
    }
  };
  if (!path) {
    emit(out, true);
    return;
  }
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(*path, ec) ||
                     std::filesystem::file_size(*path, ec) == 0;
  std::ofstream file(*path, std::ios::app);
  if (!file) throw UsageError("cannot open '" + *path + "' for appending");
  emit(file, fresh);
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Fractional Hardy inequalities on the Heisenberg group", "hardy"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all commands");
  CLI::App* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);

  const std::vector<Command> table = commands();
  struct Bound {
    const Command* command;
    CLI::App* app;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
  };
  std::vector<Bound> bound(table.size());
  for (std::size_t c = 0; c < table.size(); ++c) {
    const Command& cmd = table[c];
    const bool nested = cmd.path.rfind("verify ", 0) == 0;
    const std::string name = nested ? cmd.path.substr(7) : cmd.path;
    Bound& b = bound[c];
    b.command = &cmd;
    b.app = (nested ? verify : &app)->add_subcommand(name, cmd.help);
    for (const std::string& flag : cmd.flags) {
      const FlagSpec& spec = flag_spec(flag);
      if (spec.is_switch) {
        b.options[flag] = b.app->add_flag("--" + flag, spec.help);
      } else {
        b.options[flag] =
            b.app->add_option("--" + flag, b.values[flag], spec.help);
      }
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const Bound* chosen = nullptr;
  for (const Bound& b : bound) {
    if (b.app->parsed()) chosen = &b;
  }
  if (chosen == nullptr) {
    err << "error: no command given\n\n" << app.help();
    return kExitUsage;
  }

  try {
    Options opt;
    std::set<std::string> allowed;
    for (const auto& [flag, option] : chosen->options) {
      allowed.insert(flag);
      if (option->count() == 0) continue;
      opt.set_raw(flag, flag_spec(flag).is_switch ? "true"
                                                  : chosen->values.at(flag));
    }
    if (opt.has("config")) apply_config(chosen->values.at("config"), allowed, opt);

    const std::optional<std::string> out_path = opt.opt_string("out");
    const std::string format = opt.get_string("format", "json");
    if (format != "json" && format != "csv") {
      throw UsageError("--format must be json or csv");
    }
    if (format == "csv" && !chosen->command->csv) {
      throw UsageError("command '" + chosen->command->path +
                       "' has no CSV output; use --format json");
    }
    const bool stamp = !opt.has("no-timestamp");

    Outcome outcome = chosen->command->run(opt);

    if (format == "csv") {
      write_csv(outcome, out_path, out);
    } else {
      json doc = {{"command", chosen->command->path},
                  {"config", opt.config()},
                  {"passed", outcome.passed},
                  {"inconclusive", outcome.inconclusive},
                  {"result", outcome.result}};
      if (outcome.inconclusive) {
        doc["inconclusive_reason"] = outcome.inconclusive_reason;
      }
      if (stamp) doc["timestamp"] = timestamp_now();
      const std::string text = doc.dump(2) + "\n";
      if (out_path) {
        std::ofstream file(*out_path, std::ios::trunc);
        if (!file) throw UsageError("cannot open '" + *out_path + "' for writing");
        file << text;
      } else {
        out << text;
      }
    }
    return outcome.passed ? kExitOk : kExitCheckFailed;
  } catch (const RegimeError& e) {
    err << "regime error: " << e.what() << "\n";
    return kExitRegime;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hardy::cli
