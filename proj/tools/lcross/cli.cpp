// Copyright 2026 The lcross Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lcross/dichotomy.hpp"
#include "lcross/dist_io.hpp"
#include "lcross/error.hpp"
#include "lcross/monte_carlo.hpp"
#include "lcross/repro/acceptance.hpp"
#include "lcross/symmetrization.hpp"
#include "lcross/walk.hpp"

namespace lcross::cli {

namespace {

struct RunConfig {
  // crossing
  std::string dist;
  std::string level = "0";
  std::size_t horizon = 16;
  std::string format;
  std::size_t max_support = kDefaultMaxSupport;
  // ratio
  std::size_t family_n = 0;
  // dichotomy
  std::string input;
  std::size_t max_size = kDefaultMaxGramSize;
  // lemma1
  std::string window = "1";
  // mc
  std::string sampler = "dist";
  std::string estimand = "crossing";
  std::vector<std::size_t> steps{16};
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::size_t truncation = kDefaultFactorialTruncation;
  double location = 0.0;
  double scale = 1.0;
  unsigned threads = 0;
  // search
  std::size_t atoms = 8;
  std::size_t iterations = 10000;
  // shared
  std::string out_path;
};

std::size_t max_support_from_env() {
  const char* env = std::getenv("LCROSS_MAX_SUPPORT");
  if (env == nullptr || *env == '\0') return kDefaultMaxSupport;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(env, &pos);
    if (pos != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InputError("LCROSS_MAX_SUPPORT", "expected a positive integer");
  }
}

Rational rational_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const InvalidArgument& e) {
    throw InputError(flag, e.what());
  }
}

DiscreteDist load_dist(const std::string& name, std::ostream& err) {
  NormalizedDist nd = resolve_dist(name);
  if (nd.renormalized) err << "note: weights in " << name << " renormalized to sum 1\n";
  return std::move(nd.dist);
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("--out", "cannot open " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_crossing(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  WalkSpec spec{load_dist(cfg.dist, err), rational_flag("--level", cfg.level),
                cfg.horizon};
  spec.max_support = cfg.max_support;
  const CrossingReport report = crossing_table(spec);
  Output sink(cfg.out_path, out);
  *sink << (cfg.format == "json" ? crossing_report_json(report) + "\n"
                                 : crossing_report_csv(report));
  if (!report.all_pass()) {
    err << "verification failed: a bound verdict is false\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_ratio(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.family_n == 0 && cfg.dist.empty()) {
    throw InputError("--dist/--family-n", "one of them is required");
  }
  if (cfg.family_n != 0 && !cfg.dist.empty()) {
    throw InputError("--dist/--family-n", "give only one of them");
  }
  const DiscreteDist d =
      cfg.family_n != 0 ? optimality_family(cfg.family_n) : load_dist(cfg.dist, err);
  const RatioReport report = ratio_scan(d);
  Output sink(cfg.out_path, out);
  *sink << (cfg.format == "csv" ? ratio_report_csv(report)
                                : ratio_report_json(report) + "\n");
  const bool ok = std::all_of(report.rows.begin(), report.rows.end(),
                              [](const RatioRow& r) { return r.num < 2 * r.den; });
  if (!ok) {
    err << "verification failed: ratio reached 2\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

std::string read_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path);
  if (!in) throw InputError(flag, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_dichotomy(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GramMatrix a = parse_gram_json(read_file(cfg.input, "--input"));
  try {
    const DichotomyVerdict v = dichotomy_check(a, cfg.max_size);
    Output sink(cfg.out_path, out);
    *sink << "{\"matrix\":" << gram_to_json(a) << ",\"verdict\":" << verdict_to_json(v)
          << "}\n";
  } catch (const TheoremViolation& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_lemma1(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const DiscreteDist d = load_dist(cfg.dist, err);
  const Rational window = rational_flag("--window", cfg.window);
  if (sgn(window) <= 0) throw InputError("--window", "must be > 0");
  try {
    const Rational x = lemma1_witness(d, window);
    const auto p = [&](const Rational& y) {
      return interval_prob(d, Rational(y - window), Rational(y + window), true, true);
    };
    Output sink(cfg.out_path, out);
    *sink << "{\"x\":\"" << to_string(x) << "\",\"p_x\":\"" << to_string(p(x))
          << "\",\"p_neg_x\":\"" << to_string(p(Rational(-x))) << "\"}\n";
  } catch (const TheoremViolation& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

StepSampler make_sampler(const RunConfig& cfg, std::ostream& err) {
  if (cfg.sampler == "dist") {
    return StepSampler::from_dist(load_dist(cfg.dist.empty() ? "rademacher" : cfg.dist, err));
  }
  if (cfg.sampler == "gaussian") return StepSampler::gaussian(cfg.location, cfg.scale);
  if (cfg.sampler == "cauchy") return StepSampler::cauchy(cfg.location, cfg.scale);
  if (cfg.sampler == "factorial") return StepSampler::factorial_heavy(cfg.truncation);
  throw InputError("--sampler", "unknown sampler '" + cfg.sampler + "'");
}

int cmd_mc(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const StepSampler sampler = make_sampler(cfg, err);
  const Rational level = rational_flag("--level", cfg.level);
  const McOptions options{cfg.threads};
  bool ok = true;
  std::vector<std::pair<std::size_t, McEstimate>> rows;
  for (std::size_t n : cfg.steps) {
    McEstimate e;
    if (cfg.estimand == "crossing") {
      e = mc_crossing(sampler, n, level, cfg.samples, cfg.seed, options);
    } else if (cfg.estimand == "tie") {
      e = mc_top_two_tie(sampler, n, cfg.samples, cfg.seed, options);
    } else if (cfg.estimand == "sign-changes") {
      e = mc_sign_changes(sampler, n, cfg.samples, cfg.seed, options);
      // Bound for continuous symmetric steps.
      if (sampler.kind() != SamplerKind::kFromDist &&
          sampler.kind() != SamplerKind::kFactorialHeavy && sampler.location() == 0.0) {
        double bound = 0.0;
        for (std::size_t k = 1; k <= n; ++k) bound += 2.0 / std::sqrt(static_cast<double>(k));
        ok = ok && e.mean <= bound + 3.0 * e.half_width_95;
      }
    } else {
      throw InputError("--estimand", "unknown estimand '" + cfg.estimand + "'");
    }
    rows.emplace_back(n, e);
  }
  Output sink(cfg.out_path, out);
  if (rows.size() > 1 || cfg.format == "csv") {
    *sink << estimates_to_csv(rows);
  } else {
    std::vector<std::pair<std::string, std::string>> params{
        {"sampler", sampler.describe()},
        {"n", std::to_string(rows[0].first)},
        {"level", to_string(level)}};
    if (cfg.sampler == "dist") params.emplace_back("dist", cfg.dist.empty() ? "rademacher" : cfg.dist);
    *sink << estimate_to_json(cfg.estimand, rows[0].second, params) << '\n';
  }
  if (!ok) {
    err << "verification failed: sign-change bound exceeded\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SearchResult r = adversarial_search(cfg.atoms, cfg.iterations, cfg.seed);
  Output sink(cfg.out_path, out);
  *sink << dist_to_json(r.best) << '\n';
  err << "gamma " << to_string(r.gamma) << " (" << to_double(r.gamma) << ")\n";
  return r.gamma < 2 ? kExitOk : kExitVerificationFailed;
}

int cmd_repro(std::ostream& out) {
  const bool ok = repro::run_acceptance(out);
  out << (ok ? "all acceptance criteria passed\n" : "some acceptance criteria FAILED\n");
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact and Monte-Carlo laboratory for random-walk level crossings",
               "lcross"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* crossing = app.add_subcommand("crossing", "Exact crossing table of a walk");
  crossing->add_option("--dist", cfg.dist, "Step law: file or built-in name")->required();
  crossing->add_option("--level", cfg.level, "Level l as a rational");
  crossing->add_option("--horizon", cfg.horizon, "Last time N")->check(CLI::PositiveNumber);
  crossing->add_option("--format", cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  crossing->add_option("--out", cfg.out_path, "Output file");

  auto* ratio = app.add_subcommand("ratio", "Breakpoint scan of P(|X+Y|<=c)/P(|X-Y|<=c)");
  ratio->add_option("--dist", cfg.dist, "Law: file or built-in name");
  ratio->add_option("--family-n", cfg.family_n, "Use the periodic optimality family")
      ->check(CLI::PositiveNumber);
  ratio->add_option("--format", cfg.format, "json (summary) or csv (all rows)")
      ->check(CLI::IsMember({"csv", "json"}));
  ratio->add_option("--out", cfg.out_path, "Output file");

  auto* dich = app.add_subcommand("dichotomy", "Dichotomy check for a kernel on a support");
  dich->add_option("--input", cfg.input, "JSON file {support, kernel}")->required();
  dich->add_option("--max-size", cfg.max_size, "Face-enumeration cap");
  dich->add_option("--out", cfg.out_path, "Output file");

  auto* lemma = app.add_subcommand("lemma1", "Find x with p(-x) < 2 p(x)");
  lemma->add_option("--dist", cfg.dist, "Law: file or built-in name")->required();
  lemma->add_option("--window", cfg.window, "Half-width of the window");
  lemma->add_option("--out", cfg.out_path, "Output file");

  auto* mc = app.add_subcommand("mc", "Monte-Carlo estimators");
  mc->add_option("--sampler", cfg.sampler, "dist, gaussian, cauchy or factorial");
  mc->add_option("--dist", cfg.dist, "Step law for --sampler dist (default rademacher)");
  mc->add_option("--estimand", cfg.estimand, "crossing, tie or sign-changes");
  mc->add_option("--n", cfg.steps, "Time index (several values emit CSV)");
  mc->add_option("--level", cfg.level, "Level l as a rational");
  mc->add_option("--samples", cfg.samples, "Number of paths")->check(CLI::Range(100ULL, 1ULL << 40));
  mc->add_option("--seed", cfg.seed, "Seed (default 0)");
  mc->add_option("--K", cfg.truncation, "Truncation index of the factorial sampler");
  mc->add_option("--location", cfg.location, "Location of gaussian/cauchy steps");
  mc->add_option("--scale", cfg.scale, "Scale of gaussian/cauchy steps");
  mc->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  mc->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"csv", "json"}));
  mc->add_option("--out", cfg.out_path, "Output file");

  auto* search = app.add_subcommand("search", "Search for laws with large gamma");
  search->add_option("--atoms", cfg.atoms, "Number of atoms")->check(CLI::Range(2, 64));
  search->add_option("--iterations", cfg.iterations, "Annealing steps")->check(CLI::PositiveNumber);
  search->add_option("--seed", cfg.seed, "Seed (default 0)");
  search->add_option("--out", cfg.out_path, "Output file");

  auto* repro = app.add_subcommand("repro", "Run every acceptance criterion");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.max_support = max_support_from_env();
    if (*crossing) return cmd_crossing(cfg, out, err);
    if (*ratio) return cmd_ratio(cfg, out, err);
    if (*dich) return cmd_dichotomy(cfg, out, err);
    if (*lemma) return cmd_lemma1(cfg, out, err);
    if (*mc) return cmd_mc(cfg, out, err);
    if (*search) return cmd_search(cfg, out, err);
    if (*repro) return cmd_repro(out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TheoremViolation& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lcross::cli
