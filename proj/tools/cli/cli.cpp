#include "cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/cli_internal.hpp"
#include "otto/ensemble.hpp"

namespace otto::cli {

namespace {

bool parse_double(const std::string& s, double& x) {
  char* end = nullptr;
  x = std::strtod(s.c_str(), &end);
  return end != s.c_str() && *end == '\0';
}

CLI::Validator numeric_check(const char* description, bool (*ok)(double), const char* rule) {
  return CLI::Validator(
      [ok, rule](std::string& s) -> std::string {
        double x = 0.0;
        if (!parse_double(s, x)) return "expected a number (got '" + s + "')";
        if (!ok(x)) return std::string(rule) + " (got " + s + ")";
        return {};
      },
      description);
}

const CLI::Validator kPositive = numeric_check(
    "POSITIVE", [](double x) { return x > 0.0 && std::isfinite(x); }, "must be positive and finite");
const CLI::Validator kVelocity = numeric_check(
    "IN [0,1)", [](double x) { return x >= 0.0 && x < 1.0; }, "must satisfy 0 <= v < 1");
const CLI::Validator kOpenUnit = numeric_check(
    "IN (0,1)", [](double x) { return x > 0.0 && x < 1.0; }, "must lie in (0, 1)");
const CLI::Validator kLambda = numeric_check(
    "LAMBDA >= 1", [](double x) { return x >= 1.0 && std::isfinite(x); }, "must be >= 1");
const CLI::Validator kRelTol = numeric_check(
    "IN [1e-13,1e-6]", [](double x) { return x >= 1e-13 && x <= 1e-6; },
    "must lie in [1e-13, 1e-6]");

void add_common(CLI::App& sub, CommonOptions& common, const char* default_format) {
  sub.add_option("--config", common.config, "JSON config file (flat, or a manifest with a config member)");
  sub.add_option("--output", common.output, "output path, - for stdout")->capture_default_str();
  sub.add_option("--manifest", common.manifest,
                 "manifest path (default: <output>.manifest.json, stderr for stdout)");
  sub.add_option("--format", common.format, std::string("json or csv (default ") + default_format + ")")
      ->check(CLI::IsMember({"json", "csv"}));
}

std::string config_value_string(const Json& value) {
  if (value.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value.get<double>());
    return buf;
  }
  if (value.is_number()) return value.dump();
  if (value.is_string()) return value.get<std::string>();
  throw InputError("--config: unsupported value " + value.dump());
}

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("--config: cannot open '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("--config: '" + path + "' is not valid JSON (" + e.what() + ")");
  }
  if (doc.is_object() && doc.contains("config") && doc["config"].is_object()) return doc["config"];
  if (!doc.is_object()) throw InputError("--config: '" + path + "' must hold a JSON object");
  return doc;
}

bool flag_given(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Appends config-file values as flags; anything already on the command line wins.
void inject_config(std::vector<std::string>& args, const CLI::App& sub) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return;

  const std::vector<std::string> given = args;
  const Json config = load_config(path);
  for (const auto& [key, value] : config.items()) {
    const std::string flag = "--" + key;
    if (key == "config") continue;
    const CLI::Option* opt = sub.get_option_no_throw(flag);
    if (opt == nullptr) {
      throw InputError("--config: '" + key + "' is not a flag of '" + sub.get_name() + "'");
    }
    if (flag_given(given, flag) || value.is_null()) continue;
    if (opt->get_expected_min() == 0) {
      if (!value.is_boolean()) throw InputError("--config: '" + key + "' must be true or false");
      if (value.get<bool>()) args.push_back(flag);
      continue;
    }
    args.push_back(flag);
    args.push_back(config_value_string(value));
  }
}

}  // namespace

void write_output(const Context& ctx, const std::string& text) {
  if (ctx.common.output == "-") {
    ctx.out << text;
    ctx.out.flush();
    return;
  }
  std::ofstream file(ctx.common.output, std::ios::binary);
  if (!file) throw InputError("--output: cannot write '" + ctx.common.output + "'");
  file << text;
}

void write_manifest(const Context& ctx, const Json& manifest) {
  std::string path = ctx.common.manifest;
  if (path.empty() && ctx.common.output != "-") path = ctx.common.output + ".manifest.json";
  const std::string text = manifest.dump(2) + "\n";
  if (path.empty() || path == "-") {
    ctx.err << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("--manifest: cannot write '" + path + "'");
  file << text;
}

std::string resolved_format(const Context& ctx, const char* fallback) {
  return ctx.common.format.empty() ? std::string(fallback) : ctx.common.format;
}

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relativistic quantum Otto cycle toolkit", "otto"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "otto 0.1.0");

  CommonOptions common;
  CycleOptions cycle;
  BoundsOptions bounds;
  LambdaOptions lambda;
  SweepOptions sweep;
  EnsembleOptions scatter;
  EnsembleOptions hist;
  OptimizeOptions optimize;
  VerifyOptions verify;

  auto* c = app.add_subcommand("cycle", "evaluate one Otto cycle");
  c->add_option("--omega-c", cycle.omega_c, "cold-stroke frequency")->required()->check(kPositive);
  c->add_option("--omega-h", cycle.omega_h, "hot-stroke frequency")->required()->check(kPositive);
  c->add_option("--beta-c", cycle.beta_c, "cold-bath inverse temperature")->required()->check(kPositive);
  c->add_option("--beta-h", cycle.beta_h, "hot-bath inverse temperature")->required()->check(kPositive);
  c->add_option("--v", cycle.v, "cold-bath speed in units of c")->required()->check(kVelocity);
  auto* lam_opt = c->add_option("--lambda", cycle.lambda, "adiabaticity parameter")->check(kLambda);
  auto* proto_opt = c->add_option("--lambda-protocol", cycle.lambda_protocol,
                                  "sudden, adiabatic, linear_omega, linear_omega_squared or a CSV file");
  lam_opt->excludes(proto_opt);
  c->add_option("--duration", cycle.duration, "stroke duration for ramp protocols")->check(kPositive);
  c->add_option("--rel-tol", cycle.rel_tol, "ODE relative tolerance")->check(kRelTol)->capture_default_str();
  add_common(*c, common, "json");

  auto* b = app.add_subcommand("bounds", "efficiency bounds at one (tau, v)");
  b->add_option("--tau", bounds.tau, "beta_h / beta_c")->required()->check(kOpenUnit);
  b->add_option("--v", bounds.v, "cold-bath speed")->required()->check(kVelocity);
  add_common(*b, common, "json");

  auto* l = app.add_subcommand("lambda", "adiabaticity parameter of one stroke");
  l->add_option("--protocol", lambda.protocol,
                "sudden, adiabatic, linear_omega, linear_omega_squared or a CSV file")->required();
  l->add_option("--omega-start", lambda.omega_start, "initial frequency")->check(kPositive);
  l->add_option("--omega-end", lambda.omega_end, "final frequency")->check(kPositive);
  l->add_option("--duration", lambda.duration, "stroke duration")->check(kPositive);
  l->add_option("--rel-tol", lambda.rel_tol, "ODE relative tolerance")->check(kRelTol)->capture_default_str();
  l->add_flag("--mirror", lambda.mirror, "also integrate the time-mirrored stroke");
  add_common(*l, common, "json");

  auto* s = app.add_subcommand("sweep", "high-temperature work and efficiency along z");
  s->add_option("--preset", sweep.preset, "fig2")->check(CLI::IsMember({"fig2"}));
  s->add_option("--tau", sweep.tau, "beta_h / beta_c")->check(kOpenUnit);
  s->add_option("--v", sweep.v, "cold-bath speed, or a comma-separated list");
  s->add_option("--z-grid", sweep.z_grid, "start:stop:step, inclusive");
  s->add_option("--regime", sweep.regime, "adiabatic or sudden")
      ->check(CLI::IsMember({"adiabatic", "sudden"}));
  s->add_option("--beta-h", sweep.beta_h, "hot-bath inverse temperature (default 1)")->check(kPositive);
  add_common(*s, common, "csv");

  auto add_ensemble = [&](CLI::App* sub, EnsembleOptions& o, const char* preset) {
    sub->add_option("--preset", o.preset, preset)->check(CLI::IsMember({"fig3", "fig5"}));
    sub->add_option("--seed", o.seed, "generator seed (default 42)");
    sub->add_option("--count", o.count, "number of (omega_c, omega_h) draws");
    sub->add_option("--omega-c-max", o.omega_c_max, "omega_c drawn from (0, max)")->check(kPositive);
    sub->add_option("--omega-h-max", o.omega_h_max, "omega_h drawn from (0, max)")->check(kPositive);
    sub->add_option("--beta-c", o.beta_c, "cold-bath inverse temperature")->check(kPositive);
    sub->add_option("--beta-h", o.beta_h, "hot-bath inverse temperature")->check(kPositive);
    sub->add_option("--v", o.v, "cold-bath speed")->check(kVelocity);
  };
  auto* sc = app.add_subcommand("scatter", "Monte Carlo (w_ext, eta) cloud against the Carnot-type bound");
  add_ensemble(sc, scatter, "fig3 (default)");
  sc->add_option("--lambda", scatter.lambda, "adiabaticity parameter (default 1)")->check(kLambda);
  add_common(*sc, common, "csv");

  auto* h = app.add_subcommand("hist", "Monte Carlo histogram of quench efficiencies");
  add_ensemble(h, hist, "fig5 (default)");
  h->add_option("--bins", hist.bins, "histogram bins")->check(CLI::PositiveNumber)->capture_default_str();
  add_common(*h, common, "csv");

  auto* o = app.add_subcommand("optimize", "numeric versus closed-form maximum-work points");
  o->add_option("--regime", optimize.regime, "adiabatic, sudden or both")
      ->check(CLI::IsMember({"adiabatic", "sudden", "both"}))
      ->capture_default_str();
  o->add_option("--tau", optimize.tau, "single tau instead of the grid")->check(kOpenUnit);
  o->add_option("--v", optimize.v, "single v instead of the grid")->check(kVelocity);
  add_common(*o, common, "csv");

  auto* ver = app.add_subcommand("verify", "run the invariant and regression suite");
  ver->add_flag("--quick", verify.quick, "skip the Monte Carlo checks");
  add_common(*ver, common, "csv");

  std::vector<std::string> args = args_in;
  try {
    const auto name = std::find_if(args.begin(), args.end(),
                                   [](const std::string& a) { return !a.empty() && a[0] != '-'; });
    if (name != args.end()) {
      if (const CLI::App* sub = app.get_subcommand_no_throw(*name)) inject_config(args, *sub);
    }
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help, --version
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    const Context ctx{out, err, common, threads_from_env()};
    if (c->parsed()) return cmd_cycle(cycle, ctx);
    if (b->parsed()) return cmd_bounds(bounds, ctx);
    if (l->parsed()) return cmd_lambda(lambda, ctx);
    if (s->parsed()) return cmd_sweep(sweep, ctx);
    if (sc->parsed()) return cmd_scatter(scatter, ctx);
    if (h->parsed()) return cmd_hist(hist, ctx);
    if (o->parsed()) return cmd_optimize(optimize, ctx);
    return cmd_verify(verify, ctx);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace otto::cli
