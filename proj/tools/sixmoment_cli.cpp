#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sixmoment/error.hpp"
#include "sixmoment/estermann.hpp"
#include "sixmoment/expsums.hpp"
#include "sixmoment/moment.hpp"
#include "sixmoment/report.hpp"
#include "sixmoment/special.hpp"

namespace {

using namespace sixmoment;
using report::json;

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitNumeric = 3;

struct Flags {
  arith::u64 eta_max = 0, n_max = 0, c_max = 0, q = 0, seed = 1;
  int k = 3;
  double tol = 0.0;
  unsigned workers = 1;
  std::string out, format = "json";
  bool no_timestamps = false;
  // compute parameters
  arith::u64 eta = 0, c = 0;
  arith::i64 lambda = 1, m = 1, n = 1;
  double y = 1.0, r = 1.0;
  int j = 0;
};

std::string quote_args(int argc, char** argv) {
  std::string s = "sixmoment";
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    s += ' ';
    s += a.find_first_of(" \t'\"") == std::string::npos ? a : "'" + a + "'";
  }
  return s;
}

std::map<std::string, std::string> echo(const Flags& f, const std::string& object) {
  std::map<std::string, std::string> m;
  const auto put = [&](const char* k, auto v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    m[k] = os.str();
  };
  put("eta_max", f.eta_max);
  put("n_max", f.n_max);
  put("c_max", f.c_max);
  put("q", f.q);
  put("k", f.k);
  put("tol", f.tol);
  put("workers", f.workers);
  put("seed", f.seed);
  put("format", f.format);
  if (!object.empty()) m["object"] = object;
  return m;
}

int emit(report::ReportEnvelope& env, const Flags& f) {
  if (!f.no_timestamps) env.finished = report::utc_now();
  std::string text = f.format == "csv" ? env.to_csv() : env.to_json().dump(2) + "\n";
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(f.out, std::ios::binary);
    if (!os) {
      std::cerr << "cannot write " << f.out << "\n";
      return kExitUsage;
    }
    os << text;
    std::cerr << report::to_string(env.status()) << "\n";
  }
  switch (env.status()) {
    case report::Status::Pass: return kExitPass;
    case report::Status::Fail: return kExitFail;
    case report::Status::Partial: return kExitNumeric;
  }
  return kExitFail;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ConvergenceFailure:
    case ErrorKind::BudgetExceeded: return kExitNumeric;
    default: return kExitUsage;
  }
}

int run_verify(const std::string& suite, const Flags& f, const std::string& cmdline) {
  if (!report::is_suite(suite)) {
    std::cerr << "unknown suite: " << suite << "\n";
    return kExitUsage;
  }
  report::ReportEnvelope env;
  env.command = cmdline;
  env.config_echo = echo(f, "");
  env.config_echo["suite"] = suite;
  if (!f.no_timestamps) env.started = report::utc_now();
  report::SuiteOptions opt{f.eta_max, f.n_max, f.c_max, f.q, f.k, f.tol, f.workers, f.seed};
  std::vector<std::string> names;
  if (suite == "all") {
    for (const auto& n : report::suite_names())
      if (n != "moment-proxy") names.push_back(n);
  } else {
    names.push_back(suite);
  }
  const auto reproducer = [&](const std::string& name) {
    if (suite != "all") return cmdline;
    std::string r = cmdline;
    const auto pos = r.find(" all");
    if (pos != std::string::npos) r.replace(pos, 4, " " + name);
    return r;
  };
  for (const auto& name : names) {
    try {
      for (auto& r : report::run_suite(name, opt)) {
        if (!r.pass()) {
          r.reproducer = reproducer(name);
          if (!r.violations.empty()) r.reproducer += "  # first failing case: " + r.violations.front().case_key;
        }
        env.add(report::entry(r));
      }
    } catch (const Error& e) {
      if (exit_for(e) == kExitUsage) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
      }
      env.partial = true;
      env.add(report::entry("aborted," + name,
                            json{{"error", e.what()}, {"reproducer", reproducer(name)}}));
    }
  }
  return emit(env, f);
}

int run_compute(const std::string& object, const Flags& f, const std::string& cmdline) {
  report::ReportEnvelope env;
  env.command = cmdline;
  env.config_echo = echo(f, object);
  if (!f.no_timestamps) env.started = report::utc_now();
  if (object == "d-coeffs") {
    require(f.eta >= 1, "--eta must be >= 1");
    if (f.lambda == 1) {
      env.add(report::entry(estermann::d_coeffs_direct(f.eta)));
    } else {
      auto t = estermann::laurent_via_cauchy(f.lambda, f.eta);
      auto e = report::entry(t);
      e.body["lambda"] = f.lambda;
      e.body["method"] = "cauchy";
      env.add(std::move(e));
    }
  } else if (object == "kloosterman") {
    require(f.c >= 1, "--c must be >= 1");
    const auto kv = expsums::kloosterman(f.m, f.n, f.c);
    const auto w = expsums::weil_check(f.m, f.n, f.c);
    env.add(report::entry("kloosterman,m=" + std::to_string(f.m) + ",n=" + std::to_string(f.n) +
                              ",c=" + std::to_string(f.c),
                          json{{"re", kv.value.real()}, {"im", kv.value.imag()}, {"weil_observed", w.observed}, {"weil_bound", w.bound}}));
  } else if (object == "u-weight") {
    require(f.y > 0, "--y must be > 0");
    double imag = 0;
    moment::UWeight u(f.k);
    const double v = u(f.y, &imag);
    env.add(report::entry("u-weight,k=" + std::to_string(f.k),
                          json{{"y", f.y}, {"value", v}, {"imag_residual", std::abs(imag)}}));
  } else if (object == "diagonal") {
    moment::MomentConfig cfg;
    cfg.q = f.q ? f.q : 101;
    cfg.k = f.k;
    cfg.validate();
    env.add(report::entry(moment::diagonal_breakdown(cfg)));
  } else if (object == "moment-bound") {
    moment::MomentConfig cfg;
    cfg.q = f.q ? f.q : 11;
    cfg.k = f.k;
    cfg.workers = f.workers;
    cfg.validate();
    env.add(report::entry(moment::moment_bound_estimate(cfg)));
  } else if (object == "stieltjes") {
    require(f.j == 0 || f.j == 1, "--j must be 0 or 1");
    require(f.r > 0 && f.r <= 1, "--r must lie in (0, 1]");
    special::AccuracySpec acc;
    if (f.tol > 0) acc.rel_tol = f.tol;
    env.add(report::entry("stieltjes,j=" + std::to_string(f.j),
                          json{{"r", f.r}, {"value", special::stieltjes_gamma(f.j, f.r, acc)}}));
  } else {
    std::cerr << "unknown object: " << object << "\n";
    return kExitUsage;
  }
  return emit(env, f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites and numerical objects for the sixth-moment bound"};
  app.set_version_flag("--version", report::kToolVersion);
  app.require_subcommand(1);
  app.set_config("--config", "", "Plain key=value file; explicit flags take precedence");

  Flags f;
  app.add_option("--eta-max", f.eta_max, "Upper end of eta scans (0: suite default)");
  app.add_option("--n-max", f.n_max, "Upper end of n/coefficient ranges (0: suite default)");
  app.add_option("--c-max", f.c_max, "Upper end of modulus ranges (0: suite default)");
  app.add_option("--q", f.q, "Prime level");
  app.add_option("--k", f.k, "Weight (odd, >= 3)");
  app.add_option("--tol", f.tol, "Tolerance override (0: suite default)");
  app.add_option("--workers", f.workers, "Worker threads for parallel scans")->check(CLI::Range(1u, 256u));
  app.add_option("--out", f.out, "Write the report to this file instead of stdout");
  app.add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", f.seed, "Seed for random spot checks");
  app.add_flag("--no-timestamps", f.no_timestamps, "Omit started/finished for byte-stable output");

  std::string suite, object;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->fallthrough();
  auto* compute = app.add_subcommand("compute", "Compute a single object");
  compute->add_option("object", object, "d-coeffs | kloosterman | u-weight | diagonal | moment-bound | stieltjes")
      ->required();
  compute->add_option("--eta", f.eta, "Denominator eta");
  compute->add_option("--lambda", f.lambda, "Numerator lambda, coprime to eta");
  compute->add_option("--m", f.m, "Kloosterman m");
  compute->add_option("--n", f.n, "Kloosterman n");
  compute->add_option("--c", f.c, "Kloosterman modulus");
  compute->add_option("--y", f.y, "Argument of U");
  compute->add_option("--r", f.r, "Stieltjes shift r in (0, 1]");
  compute->add_option("--j", f.j, "Stieltjes index j in {0, 1}");
  compute->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  const std::string cmdline = quote_args(argc, argv);
  try {
    if (*verify) return run_verify(suite, f, cmdline);
    return run_compute(object, f, cmdline);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
