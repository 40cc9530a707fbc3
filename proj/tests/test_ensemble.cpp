#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "otto/bounds.hpp"
#include "otto/ensemble.hpp"
#include "otto/report.hpp"
#include "otto/rng.hpp"

namespace {

otto::EnsembleConfig small_fig5(std::uint64_t seed, std::size_t count) {
  auto cfg = otto::fig5_preset(seed);
  cfg.count = count;
  return cfg;
}

}  // namespace

TEST(SplitMix64, ReferenceSequence) {
  otto::SplitMix64 rng(0);
  EXPECT_EQ(rng(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng(), 0x6E789E6AA1B965F4ULL);
}

TEST(SplitMix64, UniformOpenStaysInside) {
  otto::SplitMix64 rng(7);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform_open();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(SplitMix64, ShardStreamsAreDistinct) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 1000; ++s) seeds.insert(otto::shard_seed(42, s));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_NE(otto::shard_seed(1, 0), otto::shard_seed(2, 0));
}

TEST(Presets, CaptionParameters) {
  const auto f3 = otto::fig3_preset();
  EXPECT_EQ(f3.count, 100000u);
  EXPECT_DOUBLE_EQ(f3.v, 0.85);
  EXPECT_DOUBLE_EQ(f3.tau(), 0.5);
  EXPECT_DOUBLE_EQ(f3.omega_h_range.hi, 60.0);
  const auto f5 = otto::fig5_preset(9);
  EXPECT_EQ(f5.seed, 9u);
  EXPECT_EQ(f5.count, 1000000u);
  EXPECT_DOUBLE_EQ(f5.tau(), 0.25);
  EXPECT_DOUBLE_EQ(f5.omega_c_range.hi, 20.0);
}

TEST(EnsembleConfig, ValidationMessages) {
  auto cfg = otto::fig3_preset();
  cfg.beta_c = cfg.beta_h;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = otto::fig3_preset();
  cfg.v = 1.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = otto::fig3_preset();
  cfg.omega_c_range = {5.0, 5.0};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = otto::fig3_preset();
  cfg.lam = 0.9;
  EXPECT_THROW(otto::run_scatter(cfg), std::invalid_argument);
}

TEST(Scatter, DeterministicAcrossThreadCounts) {
  auto cfg = otto::fig3_preset(123);
  cfg.count = 200000;  // several shards
  const auto a = otto::run_scatter(cfg, 1);
  const auto b = otto::run_scatter(cfg, 4);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    ASSERT_EQ(a.results[i].omega_c, b.results[i].omega_c);
    ASSERT_EQ(a.results[i].eta, b.results[i].eta);
  }
  EXPECT_EQ(a.violations, b.violations);
  EXPECT_EQ(a.rejected_mode, b.rejected_mode);
}

TEST(Scatter, SeedChangesSamples) {
  auto cfg = otto::fig3_preset(1);
  cfg.count = 1000;
  const auto a = otto::run_scatter(cfg);
  cfg.seed = 2;
  const auto b = otto::run_scatter(cfg);
  ASSERT_FALSE(a.results.empty());
  ASSERT_FALSE(b.results.empty());
  EXPECT_NE(a.results.front().omega_c, b.results.front().omega_c);
}

TEST(Scatter, Fig3StaysBelowGeneralizedCarnot) {
  const auto e = otto::run_scatter(otto::fig3_preset());
  EXPECT_EQ(e.violations, 0u);
  EXPECT_DOUBLE_EQ(e.bound, otto::generalized_carnot(0.5, otto::Velocity(0.85)));
  EXPECT_EQ(e.results.size() + e.rejected_mode + e.rejected_ordering, e.config.count);
  EXPECT_LT(e.max_eta(), e.bound);
  EXPECT_GT(e.max_eta(), 0.55);
  for (const auto& s : e.results) {
    ASSERT_LT(s.omega_c, s.omega_h);
    ASSERT_GT(s.w_ext, 0.0);
  }
}

TEST(Histogram, CountsEveryAcceptedSample) {
  const auto run = otto::run_histogram(small_fig5(5, 50000), 20);
  ASSERT_EQ(run.histogram.counts.size(), 20u);
  EXPECT_EQ(run.histogram.total(), run.ensemble.results.size());
  EXPECT_DOUBLE_EQ(run.histogram.lo, 0.0);
  EXPECT_DOUBLE_EQ(run.histogram.hi, otto::eta_ss_upper(0.75, otto::Velocity(0.9)));
  EXPECT_EQ(run.ensemble.violations, 0u);
}

TEST(Histogram, EmptyRun) {
  const auto run = otto::run_histogram(small_fig5(5, 0), 10);
  EXPECT_TRUE(run.ensemble.results.empty());
  EXPECT_EQ(run.histogram.counts.size(), 10u);
  EXPECT_EQ(run.histogram.total(), 0u);
  EXPECT_EQ(run.ensemble.max_eta(), 0.0);
  EXPECT_THROW(otto::run_histogram(small_fig5(5, 10), 0), std::invalid_argument);
}

TEST(Histogram, LargerRunApproachesCeilingFromBelow) {
  const auto small = otto::run_histogram(small_fig5(42, 10000));
  const auto large = otto::run_histogram(small_fig5(42, 1000000));
  EXPECT_GE(large.ensemble.max_eta(), small.ensemble.max_eta());
  EXPECT_LT(large.ensemble.max_eta(), large.ensemble.bound);
  EXPECT_LT(large.ensemble.bound - large.ensemble.max_eta(), 0.02);
}

TEST(ThreadsFromEnv, ParsesAndRejects) {
  ::setenv("OTTO_THREADS", "3", 1);
  EXPECT_EQ(otto::threads_from_env(), 3u);
  ::setenv("OTTO_THREADS", "0", 1);
  EXPECT_EQ(otto::threads_from_env(), 0u);
  ::setenv("OTTO_THREADS", "many", 1);
  EXPECT_THROW(otto::threads_from_env(), std::invalid_argument);
  ::setenv("OTTO_THREADS", "-2", 1);
  EXPECT_THROW(otto::threads_from_env(), std::invalid_argument);
  ::unsetenv("OTTO_THREADS");
  EXPECT_EQ(otto::threads_from_env(), 0u);
}

TEST(Report, SeventeenDigitsRoundTrip) {
  EXPECT_EQ(otto::format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(otto::format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Report, CsvLayouts) {
  auto cfg = otto::fig3_preset(3);
  cfg.count = 200;
  const auto e = otto::run_scatter(cfg);
  std::ostringstream scatter;
  otto::write_scatter_csv(scatter, e);
  std::istringstream lines(scatter.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "omega_c,omega_h,w_ext,eta");
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, e.results.size());

  otto::Histogram h{0.0, 1.0, {3, 0, 7, 1}};
  std::ostringstream hist;
  otto::write_histogram_csv(hist, h);
  EXPECT_EQ(hist.str(), "bin_left,bin_right,count\n0,0.25,3\n0.25,0.5,0\n0.5,0.75,7\n0.75,1,1\n");
}
