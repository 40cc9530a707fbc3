#pragma once

// Seeded Monte Carlo ensembles over (omega_c, omega_h) with bound-violation
// counting. Output is a pure function of (seed, config): the sample index
// space is cut into fixed-size shards, each with its own generator stream,
// and shards are merged in index order regardless of thread count.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace otto {

inline constexpr std::size_t kShardSize = 65536;

struct Interval {
  double lo;
  double hi;
};

struct EnsembleConfig {
  std::uint64_t seed = 42;
  std::size_t count = 100000;
  Interval omega_c_range{0.0, 30.0};
  Interval omega_h_range{0.0, 60.0};
  double beta_c = 0.2;
  double beta_h = 0.1;
  double v = 0.85;
  double lam = 1.0;  // scatter runs only; histogram runs always use the quench value

  /// Throws std::invalid_argument naming the bad field.
  void validate() const;
  double tau() const noexcept { return beta_h / beta_c; }
};

struct Sample {
  double omega_c;
  double omega_h;
  double w_ext;
  double eta;
};

struct SampleEnsemble {
  EnsembleConfig config;
  double bound = 0.0;
  std::vector<Sample> results;        // accepted (engine-mode) samples in index order
  std::size_t violations = 0;         // accepted samples with eta >= bound
  std::size_t rejected_ordering = 0;  // omega_c >= omega_h
  std::size_t rejected_mode = 0;      // not an engine

  double max_eta() const noexcept;
};

struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<std::size_t> counts;

  double bin_width() const noexcept { return (hi - lo) / static_cast<double>(counts.size()); }
  std::size_t total() const noexcept;
};

struct HistogramRun {
  SampleEnsemble ensemble;
  Histogram histogram;
};

/// Generic cycle at fixed lambda (config.lam); eta checked against the
/// generalized Carnot bound.
SampleEnsemble run_scatter(const EnsembleConfig& config, unsigned threads = 0);

/// Quench cycle; eta checked against the quench ceiling and binned on
/// [0, ceiling]. Samples at or above the ceiling land in the last bin.
HistogramRun run_histogram(const EnsembleConfig& config, std::size_t bins = 50,
                           unsigned threads = 0);

/// beta_h = 1/10, beta_c = 1/5, v = 0.85, omega_c in (0,30), omega_h in (0,60), 1e5 samples.
EnsembleConfig fig3_preset(std::uint64_t seed = 42);
/// beta_h = 1/20, beta_c = 1/5, v = 0.9, omega_c in (0,20), omega_h in (0,40), 1e6 samples.
EnsembleConfig fig5_preset(std::uint64_t seed = 42);

/// Worker count from OTTO_THREADS (0 or unset = hardware concurrency).
unsigned threads_from_env();

}  // namespace otto
