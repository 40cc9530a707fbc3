#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace otto::cli {

using Json = nlohmann::ordered_json;

// Any bad user input; reported as one line and exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string config;
  std::string output = "-";
  std::string manifest;
  std::string format;  // empty: the subcommand's natural format
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  const CommonOptions& common;
  unsigned threads;
};

struct CycleOptions {
  double omega_c = 0.0;
  double omega_h = 0.0;
  double beta_c = 0.0;
  double beta_h = 0.0;
  double v = 0.0;
  std::optional<double> lambda;
  std::string lambda_protocol;
  std::optional<double> duration;
  double rel_tol = 1e-12;
};

struct BoundsOptions {
  double tau = 0.0;
  double v = 0.0;
};

struct LambdaOptions {
  std::string protocol;
  std::optional<double> omega_start;
  std::optional<double> omega_end;
  std::optional<double> duration;
  double rel_tol = 1e-12;
  bool mirror = false;
};

struct SweepOptions {
  std::string preset;
  std::optional<double> tau;
  std::optional<std::string> v;
  std::optional<std::string> z_grid;
  std::optional<std::string> regime;
  std::optional<double> beta_h;
};

// Shared by scatter and hist; unset fields fall back to the preset.
struct EnsembleOptions {
  std::string preset;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count;
  std::optional<double> omega_c_max;
  std::optional<double> omega_h_max;
  std::optional<double> beta_c;
  std::optional<double> beta_h;
  std::optional<double> v;
  std::optional<double> lambda;
  std::size_t bins = 50;
};

struct OptimizeOptions {
  std::string regime = "both";
  std::optional<double> tau;
  std::optional<double> v;
};

struct VerifyOptions {
  bool quick = false;
};

int cmd_cycle(const CycleOptions& o, const Context& ctx);
int cmd_bounds(const BoundsOptions& o, const Context& ctx);
int cmd_lambda(const LambdaOptions& o, const Context& ctx);
int cmd_sweep(const SweepOptions& o, const Context& ctx);
int cmd_scatter(const EnsembleOptions& o, const Context& ctx);
int cmd_hist(const EnsembleOptions& o, const Context& ctx);
int cmd_optimize(const OptimizeOptions& o, const Context& ctx);
int cmd_verify(const VerifyOptions& o, const Context& ctx);

// Writes text to --output (stdout for "-").
void write_output(const Context& ctx, const std::string& text);
// Writes the run manifest next to the output file, to --manifest, or to
// stderr when the output went to stdout.
void write_manifest(const Context& ctx, const Json& manifest);

std::string resolved_format(const Context& ctx, const char* fallback);

}  // namespace otto::cli
