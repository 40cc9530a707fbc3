#include "otto/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "otto/bounds.hpp"
#include "otto/rng.hpp"
#include "otto/thermo.hpp"

namespace otto {

namespace {

struct ShardResult {
  std::vector<Sample> accepted;
  std::size_t violations = 0;
  std::size_t rejected_ordering = 0;
  std::size_t rejected_mode = 0;
};

// Returns (w_ext, eta) for an engine-mode point, nothing otherwise.
using Evaluator = std::function<std::optional<std::pair<double, double>>(double, double)>;

ShardResult run_shard(const EnsembleConfig& cfg, const Evaluator& eval, double bound,
                      std::size_t shard) {
  ShardResult out;
  SplitMix64 rng(shard_seed(cfg.seed, shard));
  const std::size_t begin = shard * kShardSize;
  const std::size_t end = std::min(cfg.count, begin + kShardSize);
  const double wc_span = cfg.omega_c_range.hi - cfg.omega_c_range.lo;
  const double wh_span = cfg.omega_h_range.hi - cfg.omega_h_range.lo;

  for (std::size_t i = begin; i < end; ++i) {
    const double wc = cfg.omega_c_range.lo + wc_span * rng.uniform_open();
    const double wh = cfg.omega_h_range.lo + wh_span * rng.uniform_open();
    if (!(wc < wh)) {
      ++out.rejected_ordering;
      continue;
    }
    const auto point = eval(wc, wh);
    if (!point) {
      ++out.rejected_mode;
      continue;
    }
    const auto [w, eta] = *point;
    if (eta >= bound) ++out.violations;
    out.accepted.push_back(Sample{wc, wh, w, eta});
  }
  return out;
}

SampleEnsemble run_ensemble(const EnsembleConfig& cfg, const Evaluator& eval, double bound,
                            unsigned threads) {
  const std::size_t shards = (cfg.count + kShardSize - 1) / kShardSize;
  std::vector<ShardResult> parts(shards);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(shards, 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t s = next++; s < shards; s = next++) {
      parts[s] = run_shard(cfg, eval, bound, s);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SampleEnsemble out;
  out.config = cfg;
  out.bound = bound;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.accepted.size();
  out.results.reserve(total);
  for (auto& p : parts) {
    out.results.insert(out.results.end(), p.accepted.begin(), p.accepted.end());
    out.violations += p.violations;
    out.rejected_ordering += p.rejected_ordering;
    out.rejected_mode += p.rejected_mode;
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void EnsembleConfig::validate() const {
  require(omega_c_range.lo >= 0.0 && omega_c_range.hi > omega_c_range.lo &&
              std::isfinite(omega_c_range.hi),
          "omega_c range must satisfy 0 <= lo < hi");
  require(omega_h_range.lo >= 0.0 && omega_h_range.hi > omega_h_range.lo &&
              std::isfinite(omega_h_range.hi),
          "omega_h range must satisfy 0 <= lo < hi");
  require(beta_h > 0.0 && std::isfinite(beta_h), "beta_h must be positive");
  require(beta_c > beta_h && std::isfinite(beta_c), "beta_c must exceed beta_h");
  require(v >= 0.0 && v < 1.0, "v must satisfy 0 <= v < 1");
  require(lam >= 1.0 && std::isfinite(lam), "lambda must be >= 1");
}

double SampleEnsemble::max_eta() const noexcept {
  double m = 0.0;
  for (const auto& s : results) m = std::max(m, s.eta);
  return m;
}

std::size_t Histogram::total() const noexcept {
  std::size_t n = 0;
  for (auto c : counts) n += c;
  return n;
}

SampleEnsemble run_scatter(const EnsembleConfig& config, unsigned threads) {
  config.validate();
  const Velocity v(config.v);
  const double bound = generalized_carnot(config.tau(), v);
  Evaluator eval = [&config, v](double wc, double wh) -> std::optional<std::pair<double, double>> {
    const CycleResult r = evaluate_cycle(EngineParams{.omega_c = wc,
                                                      .omega_h = wh,
                                                      .beta_c = config.beta_c,
                                                      .beta_h = config.beta_h,
                                                      .v = v,
                                                      .lam = config.lam});
    if (r.mode != OperatingMode::engine) return std::nullopt;
    return std::pair{r.w_ext, *r.eta};
  };
  return run_ensemble(config, eval, bound, threads);
}

HistogramRun run_histogram(const EnsembleConfig& config, std::size_t bins, unsigned threads) {
  config.validate();
  if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
  const Velocity v(config.v);
  const double bound = eta_ss_upper(1.0 - config.tau(), v);
  Evaluator eval = [&config, v](double wc, double wh) -> std::optional<std::pair<double, double>> {
    const EngineParams p{.omega_c = wc,
                         .omega_h = wh,
                         .beta_c = config.beta_c,
                         .beta_h = config.beta_h,
                         .v = v,
                         .lam = lambda_closed_form(DrivingRegime::sudden, wc, wh)};
    const auto eta = eta_ss_exact(p);
    if (!eta) return std::nullopt;
    return std::pair{w_ss_exact(p), *eta};
  };

  HistogramRun run{run_ensemble(config, eval, bound, threads), Histogram{}};
  run.histogram.lo = 0.0;
  run.histogram.hi = bound;
  run.histogram.counts.assign(bins, 0);
  const double scale = static_cast<double>(bins) / bound;
  for (const auto& s : run.ensemble.results) {
    const double pos = std::max(0.0, s.eta) * scale;
    const auto bin = std::min(bins - 1, static_cast<std::size_t>(pos));
    ++run.histogram.counts[bin];
  }
  return run;
}

EnsembleConfig fig3_preset(std::uint64_t seed) {
  EnsembleConfig c;
  c.seed = seed;
  c.count = 100000;
  c.omega_c_range = {0.0, 30.0};
  c.omega_h_range = {0.0, 60.0};
  c.beta_c = 1.0 / 5.0;
  c.beta_h = 1.0 / 10.0;
  c.v = 0.85;
  c.lam = 1.0;
  return c;
}

EnsembleConfig fig5_preset(std::uint64_t seed) {
  EnsembleConfig c;
  c.seed = seed;
  c.count = 1000000;
  c.omega_c_range = {0.0, 20.0};
  c.omega_h_range = {0.0, 40.0};
  c.beta_c = 1.0 / 5.0;
  c.beta_h = 1.0 / 20.0;
  c.v = 0.9;
  c.lam = 1.0;
  return c;
}

unsigned threads_from_env() {
  const char* raw = std::getenv("OTTO_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long n = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || n < 0) {
    throw std::invalid_argument(std::string("OTTO_THREADS must be a non-negative integer (got '") +
                                raw + "')");
  }
  return static_cast<unsigned>(n);
}

}  // namespace otto
