#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "cli/cli.hpp"
#include "cli/cli_internal.hpp"
#include "otto/adiabaticity.hpp"
#include "otto/bounds.hpp"
#include "otto/ensemble.hpp"
#include "otto/optimize.hpp"
#include "otto/protocol.hpp"
#include "otto/report.hpp"
#include "otto/rng.hpp"
#include "otto/selfcheck.hpp"
#include "otto/thermo.hpp"

namespace otto::cli {

namespace {

using Cell = std::variant<double, long long, std::string, std::monostate>;

// A rectangular result set that renders as CSV or as JSON rows.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c)) return csv_field(*s);
  return "";
}

Json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return nullptr;
}

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t k = 0; k < t.columns.size(); ++k) {
    out += (k ? "," : "") + t.columns[k];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      out += (k ? "," : "") + cell_text(row[k]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json_rows(const std::string& subcommand, const Json& config, const Table& t) {
  Json doc;
  doc["subcommand"] = subcommand;
  doc["config"] = config;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::object();
    for (std::size_t k = 0; k < row.size(); ++k) r[t.columns[k]] = cell_json(row[k]);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

void emit_table(const Context& ctx, const std::string& subcommand, const Json& config,
                const Table& t) {
  write_output(ctx, resolved_format(ctx, "csv") == "csv" ? render_csv(t)
                                                          : render_json_rows(subcommand, config, t));
}

// Single-record JSON documents (cycle, bounds, lambda) as a one-row CSV when asked.
void emit_record(const Context& ctx, const Json& doc) {
  if (resolved_format(ctx, "json") == "json") {
    write_output(ctx, doc.dump(2) + "\n");
    return;
  }
  Table t;
  t.rows.emplace_back();
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object() || value.is_array()) continue;
    t.columns.push_back(key);
    if (value.is_number_float()) {
      t.rows[0].emplace_back(value.get<double>());
    } else if (value.is_number()) {
      t.rows[0].emplace_back(value.get<long long>());
    } else if (value.is_string()) {
      t.rows[0].emplace_back(value.get<std::string>());
    } else if (value.is_boolean()) {
      t.rows[0].emplace_back(value.get<bool>() ? 1LL : 0LL);
    } else {
      t.rows[0].emplace_back(std::monostate{});
    }
  }
  write_output(ctx, render_csv(t));
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

std::string num(double x) { return format_double(x); }

// ---- stroke protocols -------------------------------------------------------

struct ClosedForm {
  DrivingRegime regime;
};

using StrokeSpec = std::variant<ClosedForm, DriveProtocol>;

bool is_named_protocol(const std::string& name) {
  return name == "sudden" || name == "adiabatic" || name == "linear_omega" ||
         name == "linear_omega_squared";
}

bool close_to(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

StrokeSpec resolve_stroke(const std::string& flag, const std::string& name, double omega_start,
                          double omega_end, std::optional<double> duration) {
  if (name == "sudden") return ClosedForm{DrivingRegime::sudden};
  if (name == "adiabatic") return ClosedForm{DrivingRegime::adiabatic};
  if (name == "linear_omega" || name == "linear_omega_squared") {
    require(duration.has_value(), flag + " " + name + " needs --duration");
    return name == "linear_omega" ? DriveProtocol::linear_omega(omega_start, omega_end, *duration)
                                  : DriveProtocol::linear_omega_squared(omega_start, omega_end,
                                                                        *duration);
  }
  require(std::filesystem::exists(name),
          flag + ": '" + name +
              "' is neither a protocol name (sudden, adiabatic, linear_omega, "
              "linear_omega_squared) nor an existing file");
  DriveProtocol p = [&] {
    try {
      return load_protocol_csv(name);
    } catch (const std::exception& e) {
      throw InputError(flag + ": " + e.what());
    }
  }();
  require(close_to(p.omega_start(), omega_start) && close_to(p.omega_end(), omega_end),
          flag + ": protocol runs from omega = " + num(p.omega_start()) + " to " +
              num(p.omega_end()) + " but the stroke needs " + num(omega_start) + " to " +
              num(omega_end));
  require(!duration || close_to(*duration, p.duration()),
          "--duration " + num(*duration) + " disagrees with the protocol file duration " +
              num(p.duration()));
  return p;
}

Json stats_json(const IntegratorStats& s, double wronskian) {
  return Json{{"steps", s.steps},
              {"rejected", s.rejected},
              {"max_error_norm", s.max_error_norm},
              {"max_wronskian_drift", s.max_wronskian_drift},
              {"final_wronskian", wronskian}};
}

// ---- value lists ------------------------------------------------------------

std::vector<double> parse_list(const std::string& flag, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double x = std::strtod(item.c_str(), &end);
    require(end != item.c_str() && *end == '\0', flag + ": cannot parse '" + item + "'");
    out.push_back(x);
  }
  require(!out.empty(), flag + ": empty list");
  return out;
}

std::vector<double> parse_z_grid(const std::string& text) {
  std::array<double, 3> f{};
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ':')) {
    require(k < 3, "--z-grid: expected start:stop:step (got '" + text + "')");
    char* end = nullptr;
    f[k] = std::strtod(item.c_str(), &end);
    require(end != item.c_str() && *end == '\0', "--z-grid: cannot parse '" + item + "'");
    ++k;
  }
  require(k == 3, "--z-grid: expected start:stop:step (got '" + text + "')");
  const auto [start, stop, step] = f;
  require(start > 0.0 && stop < 1.0 && start <= stop,
          "--z-grid: need 0 < start <= stop < 1 (got '" + text + "')");
  require(step > 0.0, "--z-grid: step must be positive (got '" + text + "')");
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  require(n <= 10'000'000, "--z-grid: more than 1e7 points");
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = start + static_cast<double>(i) * step;
  return z;
}

}  // namespace

// ---- cycle ------------------------------------------------------------------

int cmd_cycle(const CycleOptions& o, const Context& ctx) {
  require(o.omega_c < o.omega_h, "--omega-c must be below --omega-h (got " + num(o.omega_c) +
                                     " >= " + num(o.omega_h) + ")");
  require(o.beta_c > o.beta_h, "--beta-c must exceed --beta-h (got " + num(o.beta_c) +
                                   " <= " + num(o.beta_h) + ")");
  require(o.lambda || !o.lambda_protocol.empty(), "one of --lambda or --lambda-protocol is required");

  Json config{{"omega-c", o.omega_c}, {"omega-h", o.omega_h}, {"beta-c", o.beta_c},
              {"beta-h", o.beta_h},   {"v", o.v}};
  Json extra = Json::object();
  double lam = 1.0;
  std::string source = "flag";
  if (o.lambda) {
    lam = *o.lambda;
    config["lambda"] = lam;
  } else {
    config["lambda-protocol"] = o.lambda_protocol;
    if (o.duration) config["duration"] = *o.duration;
    const StrokeSpec spec =
        resolve_stroke("--lambda-protocol", o.lambda_protocol, o.omega_c, o.omega_h, o.duration);
    if (const auto* cf = std::get_if<ClosedForm>(&spec)) {
      lam = lambda_closed_form(cf->regime, o.omega_c, o.omega_h);
      source = "closed_form";
    } else {
      config["rel-tol"] = o.rel_tol;
      const StrokeLambdas both = stroke_lambdas(std::get<DriveProtocol>(spec), o.rel_tol);
      lam = both.compression;
      extra["lambda_expansion"] = both.expansion;
      source = "ode";
    }
  }

  const EngineParams params{.omega_c = o.omega_c,
                            .omega_h = o.omega_h,
                            .beta_c = o.beta_c,
                            .beta_h = o.beta_h,
                            .v = Velocity(o.v),
                            .lam = lam};
  const CycleEnergies e = cycle_energies(params);
  const CycleResult r = evaluate_cycle(params);

  Json doc;
  doc["subcommand"] = "cycle";
  doc["config"] = config;
  doc["lambda"] = lam;
  doc["lambda_source"] = source;
  for (const auto& [k, v] : extra.items()) doc[k] = v;
  doc["h_a"] = e.h_a;
  doc["h_b"] = e.h_b;
  doc["h_c"] = e.h_c;
  doc["h_d"] = e.h_d;
  doc["w_ab"] = r.w_ab;
  doc["w_cd"] = r.w_cd;
  doc["q_h"] = r.q_h;
  doc["q_c"] = r.q_c;
  doc["w_ext"] = r.w_ext;
  doc["eta"] = r.eta ? Json(*r.eta) : Json(nullptr);
  doc["mode"] = std::string(to_string(r.mode));
  emit_record(ctx, doc);
  return r.mode == OperatingMode::engine ? kExitOk : kExitNonEngine;
}

// ---- bounds -----------------------------------------------------------------

int cmd_bounds(const BoundsOptions& o, const Context& ctx) {
  const Velocity v(o.v);
  const BoundsReport b = bounds_report(o.tau, v);
  Json doc;
  doc["subcommand"] = "bounds";
  doc["config"] = Json{{"tau", o.tau}, {"v", o.v}};
  doc["tau"] = b.tau;
  doc["v"] = b.v;
  doc["doppler_factor"] = doppler_factor(v);
  doc["eta_carnot"] = b.eta_carnot;
  doc["eta_gen_carnot"] = b.eta_gen_carnot;
  doc["t_c_eff"] = b.t_c_eff;
  doc["eta_mw_adiabatic"] = b.eta_mw_adiabatic;
  doc["z_min_adiabatic"] = b.z_min_adiabatic;
  doc["z2_min_sudden"] = b.z2_min_sudden;
  doc["eta_ss_upper"] = b.eta_ss_upper;
  doc["eta_ss_mw"] = b.eta_ss_mw;
  doc["eta_rk"] = b.eta_rk;
  emit_record(ctx, doc);
  return kExitOk;
}

// ---- lambda -----------------------------------------------------------------

int cmd_lambda(const LambdaOptions& o, const Context& ctx) {
  Json config{{"protocol", o.protocol}};
  double w0 = 0.0;
  double w1 = 0.0;
  if (is_named_protocol(o.protocol)) {
    require(o.omega_start.has_value(), "--omega-start is required for --protocol " + o.protocol);
    require(o.omega_end.has_value(), "--omega-end is required for --protocol " + o.protocol);
    w0 = *o.omega_start;
    w1 = *o.omega_end;
  } else {
    // A file carries its own endpoints; explicit flags are checked against them.
    DriveProtocol p = [&] {
      require(std::filesystem::exists(o.protocol),
              "--protocol: '" + o.protocol + "' is neither a protocol name nor an existing file");
      try {
        return load_protocol_csv(o.protocol);
      } catch (const std::exception& e) {
        throw InputError(std::string("--protocol: ") + e.what());
      }
    }();
    w0 = o.omega_start.value_or(p.omega_start());
    w1 = o.omega_end.value_or(p.omega_end());
  }
  if (o.omega_start) config["omega-start"] = *o.omega_start;
  if (o.omega_end) config["omega-end"] = *o.omega_end;
  if (o.duration) config["duration"] = *o.duration;

  const StrokeSpec spec = resolve_stroke("--protocol", o.protocol, w0, w1, o.duration);

  Json doc;
  doc["subcommand"] = "lambda";
  if (const auto* cf = std::get_if<ClosedForm>(&spec)) {
    doc["config"] = config;
    doc["lambda"] = lambda_closed_form(cf->regime, w0, w1);
    doc["lambda_source"] = "closed_form";
  } else {
    config["rel-tol"] = o.rel_tol;
    if (o.mirror) config["mirror"] = true;
    doc["config"] = config;
    const auto& p = std::get<DriveProtocol>(spec);
    const OscillatorTrajectory fwd = solve_husimi(p, o.rel_tol);
    doc["lambda"] = lambda_from_trajectory(fwd, w0, w1);
    doc["lambda_source"] = "ode";
    doc["kind"] = std::string(to_string(p.kind()));
    doc["duration"] = p.duration();
    doc["integrator"] = stats_json(fwd.stats, fwd.wronskian());
    if (o.mirror) {
      const OscillatorTrajectory back = solve_husimi(p.reversed(), o.rel_tol);
      const double lam_back = lambda_from_trajectory(back, w1, w0);
      doc["lambda_mirrored"] = lam_back;
      doc["mirror_relative_difference"] =
          std::abs(lam_back - doc["lambda"].get<double>()) / doc["lambda"].get<double>();
      doc["integrator_mirrored"] = stats_json(back.stats, back.wronskian());
    }
  }
  emit_record(ctx, doc);
  return kExitOk;
}

// ---- sweep ------------------------------------------------------------------

int cmd_sweep(const SweepOptions& o, const Context& ctx) {
  const bool fig2 = o.preset == "fig2";
  require(fig2 || o.tau, "--tau is required without --preset");
  require(fig2 || o.v, "--v is required without --preset");
  require(fig2 || o.z_grid, "--z-grid is required without --preset");

  const double tau = o.tau.value_or(0.5);
  const std::string v_text = o.v.value_or("0,0.5,0.9");
  const std::string grid_text = o.z_grid.value_or("0.01:0.99:0.01");
  const std::string regime_name = o.regime.value_or("adiabatic");
  const double beta_h = o.beta_h.value_or(1.0);
  const DrivingRegime regime =
      regime_name == "sudden" ? DrivingRegime::sudden : DrivingRegime::adiabatic;

  std::vector<Velocity> velocities;
  for (double x : parse_list("--v", v_text)) {
    require(x >= 0.0 && x < 1.0, "--v: must satisfy 0 <= v < 1 (got " + num(x) + ")");
    velocities.emplace_back(x);
  }
  const std::vector<double> zs = parse_z_grid(grid_text);

  Json config;
  if (fig2) config["preset"] = "fig2";
  config["tau"] = tau;
  config["v"] = v_text;
  config["z-grid"] = grid_text;
  config["regime"] = regime_name;
  config["beta-h"] = beta_h;

  Table t{{"v", "z", "w_ext", "eta", "engine"}, {}};
  Json per_velocity = Json::array();
  for (const Velocity& v : velocities) {
    const double s = tau * doppler_factor(v);
    Json crossing = nullptr;
    double prev_z = 0.0;
    double prev_w = 0.0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const double z = zs[i];
      const double w = regime == DrivingRegime::adiabatic ? w_adiabatic_high_t(z, tau, v, beta_h)
                                                          : w_ss_high_t(z, tau, v, beta_h);
      const bool engine = w > 0.0;
      Cell eta = std::monostate{};
      if (engine) {
        eta = regime == DrivingRegime::adiabatic ? 1.0 - z : eta_ss_high_t(z, tau, v);
      }
      t.rows.push_back({v.value(), z, w, eta, engine ? 1LL : 0LL});
      if (i > 0 && crossing.is_null() && (prev_w <= 0.0) != (w <= 0.0)) {
        crossing = prev_z + (z - prev_z) * prev_w / (prev_w - w);
      }
      prev_z = z;
      prev_w = w;
    }
    per_velocity.push_back(Json{
        {"v", v.value()},
        {"threshold_z", regime == DrivingRegime::adiabatic ? s : std::sqrt(s)},
        {"grid_zero_crossing", crossing},
    });
  }
  emit_table(ctx, "sweep", config, t);

  Json manifest;
  manifest["subcommand"] = "sweep";
  manifest["config"] = config;
  manifest["rows"] = t.rows.size();
  manifest["velocities"] = per_velocity;
  write_manifest(ctx, manifest);
  return kExitOk;
}

// ---- scatter / hist ---------------------------------------------------------

namespace {

struct ResolvedEnsemble {
  EnsembleConfig cfg;
  Json config;
};

ResolvedEnsemble resolve_ensemble(const EnsembleOptions& o, const std::string& default_preset,
                                  bool with_lambda) {
  const std::string preset = o.preset.empty() ? default_preset : o.preset;
  const std::uint64_t seed = o.seed.value_or(42);
  EnsembleConfig cfg = preset == "fig5" ? fig5_preset(seed) : fig3_preset(seed);
  if (o.count) cfg.count = *o.count;
  if (o.omega_c_max) cfg.omega_c_range.hi = *o.omega_c_max;
  if (o.omega_h_max) cfg.omega_h_range.hi = *o.omega_h_max;
  if (o.beta_c) cfg.beta_c = *o.beta_c;
  if (o.beta_h) cfg.beta_h = *o.beta_h;
  if (o.v) cfg.v = *o.v;
  if (with_lambda && o.lambda) cfg.lam = *o.lambda;

  require(cfg.beta_c > cfg.beta_h, "--beta-c must exceed --beta-h (got " + num(cfg.beta_c) +
                                       " <= " + num(cfg.beta_h) + ")");
  require(cfg.count <= 100'000'000, "--count: at most 1e8 samples");

  Json config;
  config["preset"] = preset;
  config["seed"] = cfg.seed;
  config["count"] = cfg.count;
  config["omega-c-max"] = cfg.omega_c_range.hi;
  config["omega-h-max"] = cfg.omega_h_range.hi;
  config["beta-c"] = cfg.beta_c;
  config["beta-h"] = cfg.beta_h;
  config["v"] = cfg.v;
  if (with_lambda) config["lambda"] = cfg.lam;
  return {cfg, config};
}

Json ensemble_manifest(const std::string& subcommand, const Json& config, const SampleEnsemble& e,
                       const char* bound_kind) {
  Json m;
  m["subcommand"] = subcommand;
  m["config"] = config;
  m["generator"] = kGeneratorId;
  m["seed"] = e.config.seed;
  m["count"] = e.config.count;
  m["bound_kind"] = bound_kind;
  m["bound"] = e.bound;
  m["violations"] = e.violations;
  m["accepted"] = e.results.size();
  m["rejected_ordering"] = e.rejected_ordering;
  m["rejected_mode"] = e.rejected_mode;
  m["max_eta"] = e.results.empty() ? Json(nullptr) : Json(e.max_eta());
  return m;
}

}  // namespace

int cmd_scatter(const EnsembleOptions& o, const Context& ctx) {
  const auto [cfg, config] = resolve_ensemble(o, "fig3", true);
  const SampleEnsemble e = run_scatter(cfg, ctx.threads);

  Table t{{"omega_c", "omega_h", "w_ext", "eta"}, {}};
  if (resolved_format(ctx, "csv") == "csv") {
    std::ostringstream os;
    write_scatter_csv(os, e);
    write_output(ctx, os.str());
  } else {
    t.rows.reserve(e.results.size());
    for (const auto& s : e.results) t.rows.push_back({s.omega_c, s.omega_h, s.w_ext, s.eta});
    emit_table(ctx, "scatter", config, t);
  }
  write_manifest(ctx, ensemble_manifest("scatter", config, e,
                                        cfg.v == 0.0 ? "carnot" : "generalized_carnot"));
  return kExitOk;
}

int cmd_hist(const EnsembleOptions& o, const Context& ctx) {
  auto [cfg, config] = resolve_ensemble(o, "fig5", false);
  config["bins"] = o.bins;
  const HistogramRun run = run_histogram(cfg, o.bins, ctx.threads);

  if (resolved_format(ctx, "csv") == "csv") {
    std::ostringstream os;
    write_histogram_csv(os, run.histogram);
    write_output(ctx, os.str());
  } else {
    Table t{{"bin_left", "bin_right", "count"}, {}};
    const double width = run.histogram.bin_width();
    for (std::size_t k = 0; k < run.histogram.counts.size(); ++k) {
      t.rows.push_back({run.histogram.lo + width * static_cast<double>(k),
                        run.histogram.lo + width * static_cast<double>(k + 1),
                        static_cast<long long>(run.histogram.counts[k])});
    }
    emit_table(ctx, "hist", config, t);
  }
  Json m = ensemble_manifest("hist", config, run.ensemble, "quench_ceiling");
  m["bins"] = o.bins;
  write_manifest(ctx, m);
  return kExitOk;
}

// ---- optimize ---------------------------------------------------------------

int cmd_optimize(const OptimizeOptions& o, const Context& ctx) {
  std::vector<double> taus{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<double> vs{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  if (o.tau) taus = {*o.tau};
  if (o.v) vs = {*o.v};
  std::vector<DrivingRegime> regimes;
  if (o.regime != "sudden") regimes.push_back(DrivingRegime::adiabatic);
  if (o.regime != "adiabatic") regimes.push_back(DrivingRegime::sudden);

  Json config{{"regime", o.regime}};
  if (o.tau) config["tau"] = *o.tau;
  if (o.v) config["v"] = *o.v;

  Table t{{"regime", "tau", "v", "z_numeric", "z_closed_form", "abs_error", "eta_numeric",
           "eta_closed_form"},
          {}};
  Json worst = Json::object();
  for (DrivingRegime regime : regimes) {
    double max_err = 0.0;
    for (double tau : taus) {
      for (double vv : vs) {
        const MaximumWorkPoint m = maximum_work_point(regime, tau, Velocity(vv));
        const double err = std::abs(m.z_numeric - m.z_closed_form);
        max_err = std::max(max_err, err);
        t.rows.push_back({std::string(to_string(regime)), tau, vv, m.z_numeric, m.z_closed_form, err,
                          m.eta_numeric, m.eta_closed_form});
      }
    }
    worst[std::string(to_string(regime))] = max_err;
  }
  emit_table(ctx, "optimize", config, t);

  Json manifest;
  manifest["subcommand"] = "optimize";
  manifest["config"] = config;
  manifest["points"] = t.rows.size();
  manifest["max_abs_error"] = worst;
  write_manifest(ctx, manifest);
  return kExitOk;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const VerifyOptions& o, const Context& ctx) {
  const auto outcomes =
      run_self_checks(SelfCheckOptions{.threads = ctx.threads, .include_ensembles = !o.quick});

  Json config = Json::object();
  if (o.quick) config["quick"] = true;
  Table t{{"check", "passed", "detail"}, {}};
  Json failed = Json::array();
  for (const auto& c : outcomes) {
    t.rows.push_back({c.name, c.passed ? 1LL : 0LL, c.detail});
    if (!c.passed) failed.push_back(c.name);
  }
  emit_table(ctx, "verify", config, t);

  Json manifest;
  manifest["subcommand"] = "verify";
  manifest["config"] = config;
  manifest["checks"] = outcomes.size();
  manifest["failed"] = failed;
  write_manifest(ctx, manifest);

  for (const auto& c : outcomes) {
    if (!c.passed) ctx.err << "FAILED " << c.name << ": " << c.detail << "\n";
  }
  return failed.empty() ? kExitOk : kExitChecksFailed;
}

}  // namespace otto::cli
