#include "otto/selfcheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "otto/adiabaticity.hpp"
#include "otto/bounds.hpp"
#include "otto/ensemble.hpp"
#include "otto/optimize.hpp"
#include "otto/report.hpp"
#include "otto/rng.hpp"
#include "otto/thermo.hpp"

namespace otto {

namespace {

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Random valid operating point; shared by the closure and sub-1/2 checks.
EngineParams random_params(SplitMix64& rng) {
  const double tau = 0.05 + 0.9 * rng.uniform_open();
  const double beta_h = 0.01 + 4.99 * rng.uniform_open();
  const double omega_c = 0.01 + 49.99 * rng.uniform_open();
  const double z = 0.02 + 0.97 * rng.uniform_open();
  const double v = 0.99 * rng.uniform_open();
  const double lam = 1.0 + 2.0 * rng.uniform_open();
  return EngineParams{.omega_c = omega_c,
                      .omega_h = omega_c / z,
                      .beta_c = beta_h / tau,
                      .beta_h = beta_h,
                      .v = Velocity(v),
                      .lam = lam};
}

constexpr std::array<double, 9> kTauGrid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

std::vector<double> velocity_grid() {
  std::vector<double> vs;
  for (int i = 0; i <= 19; ++i) vs.push_back(0.05 * i);
  return vs;  // 0, 0.05, ..., 0.95
}

class Suite {
 public:
  using Body = std::function<bool(std::ostringstream&)>;

  void add(std::string name, const Body& body) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
      ok = false;
    }
    outcomes_.push_back(CheckOutcome{std::move(name), ok, detail.str()});
  }

  std::vector<CheckOutcome> take() { return std::move(outcomes_); }

 private:
  std::vector<CheckOutcome> outcomes_;
};

void thermo_checks(Suite& suite) {
  suite.add("first_law_closure", [](std::ostringstream& d) {
    SplitMix64 rng(2024);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const CycleResult r = evaluate_cycle(random_params(rng));
      const double scale = std::max({std::abs(r.q_h), std::abs(r.q_c), 1.0});
      worst = std::max(worst, std::abs(r.w_ab + r.w_cd + r.q_h + r.q_c) / scale);
      worst = std::max(worst, std::abs(r.w_ext - (r.q_h + r.q_c)) / scale);
    }
    d << "max scaled residual " << format_double(worst);
    return worst <= 1e-12;
  });

  suite.add("corner_energy_identity", [](std::ostringstream& d) {
    SplitMix64 rng(7);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const EngineParams p = random_params(rng);
      const double direct = energy_a(p);
      const double via_n = (mean_photon_moving(p.beta_c, p.omega_c, p.v) + 0.5) * p.omega_c;
      worst = std::max(worst, rel_diff(direct, via_n));
    }
    d << "max relative gap " << format_double(worst);
    return worst <= 1e-10;
  });

  suite.add("stationary_limit_continuity", [](std::ostringstream& d) {
    const Velocity tiny(1e-12);
    const Velocity rest(0.0);
    double worst = 0.0;
    for (double beta : {0.01, 0.2, 1.0, 5.0, 40.0}) {
      for (double omega : {0.05, 1.0, 7.0}) {
        worst = std::max(worst, rel_diff(mean_photon_moving(beta, omega, tiny),
                                         mean_photon_moving(beta, omega, rest)));
        worst = std::max(worst, rel_diff(moving_bath_energy(beta, omega, tiny),
                                         moving_bath_energy(beta, omega, rest)));
      }
    }
    worst = std::max(worst, rel_diff(doppler_factor(tiny), doppler_factor(rest)));
    EngineParams p{.omega_c = 1.0, .omega_h = 2.0, .beta_c = 0.5, .beta_h = 0.2, .v = rest};
    const double w0 = evaluate_cycle(p).w_ext;
    p.v = tiny;
    worst = std::max(worst, rel_diff(evaluate_cycle(p).w_ext, w0));
    d << "max relative gap " << format_double(worst);
    return worst <= 1e-8;
  });

  suite.add("doppler_factor_decreasing", [](std::ostringstream& d) {
    double prev = doppler_factor(Velocity(0.0));
    for (int i = 1; i <= 99; ++i) {
      const double f = doppler_factor(Velocity(0.01 * i));
      if (!(f < prev) || !(f > 0.0)) {
        d << "not strictly decreasing at v = " << 0.01 * i;
        return false;
      }
      prev = f;
    }
    return true;
  });

  suite.add("work_decreasing_in_lambda", [](std::ostringstream& d) {
    SplitMix64 rng(11);
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
      EngineParams p = random_params(rng);
      p.lam = 1.0;
      if (evaluate_cycle(p).mode != OperatingMode::engine) continue;
      double prev = evaluate_cycle(p).w_ext;
      for (double lam : {1.05, 1.1, 1.5}) {
        p.lam = lam;
        const double w = evaluate_cycle(p).w_ext;
        if (!(w < prev)) {
          d << "W_ext not decreasing at lambda " << lam;
          return false;
        }
        prev = w;
      }
      ++checked;
    }
    d << checked << " engine points";
    return checked > 0;
  });

  suite.add("sudden_efficiency_below_half", [](std::ostringstream& d) {
    SplitMix64 rng(99);
    double worst = 0.0;
    int engines = 0;
    for (int i = 0; i < 100000; ++i) {
      const auto eta = eta_ss_exact(random_params(rng));
      if (!eta) continue;
      ++engines;
      worst = std::max(worst, *eta);
    }
    d << engines << " engine points, max eta " << format_double(worst);
    return engines > 0 && worst < 0.5;
  });
}

void adiabaticity_checks(Suite& suite) {
  suite.add("lambda_at_least_one", [](std::ostringstream& d) {
    double worst = INFINITY;
    for (auto [a, b] : {std::pair{1.0, 2.0}, {2.0, 1.0}, {0.5, 3.0}}) {
      for (double dur : {1e-3, 0.1, 1.0, 10.0, 100.0}) {
        worst = std::min(worst, stroke_lambda(DriveProtocol::linear_omega(a, b, dur)));
        worst = std::min(worst, stroke_lambda(DriveProtocol::linear_omega_squared(a, b, dur)));
      }
    }
    d << "min lambda " << format_double(worst);
    return worst >= 1.0 - 1e-9;
  });

  suite.add("sudden_limit_convergence", [](std::ostringstream& d) {
    const double target = lambda_closed_form(DrivingRegime::sudden, 1.0, 2.0);
    double prev = INFINITY;
    for (double dur : {1e-2, 1e-3, 1e-4}) {
      const double gap = std::abs(stroke_lambda(DriveProtocol::linear_omega(1.0, 2.0, dur)) - target);
      d << "d=" << dur << " gap=" << format_double(gap) << "; ";
      if (!(gap < prev)) return false;
      prev = gap;
    }
    return prev < 1e-3;
  });

  suite.add("adiabatic_limit_convergence", [](std::ostringstream& d) {
    const double l50 = stroke_lambda(DriveProtocol::linear_omega(1.0, 2.0, 50.0)) - 1.0;
    const double l200 = stroke_lambda(DriveProtocol::linear_omega(1.0, 2.0, 200.0)) - 1.0;
    d << "lambda-1: d=50 " << format_double(l50) << ", d=200 " << format_double(l200);
    return l200 < l50 && l200 < 1e-4 && l200 >= -1e-9;
  });

  suite.add("wronskian_conservation", [](std::ostringstream& d) {
    double worst = 0.0;
    for (double dur : {1e-4, 1.0, 200.0}) {
      worst = std::max(worst,
                       solve_husimi(DriveProtocol::linear_omega(1.0, 2.0, dur)).stats.max_wronskian_drift);
    }
    d << "max drift " << format_double(worst);
    return worst < 1e-9;
  });

  suite.add("time_mirrored_strokes_agree", [](std::ostringstream& d) {
    const auto l = stroke_lambdas(DriveProtocol::linear_omega_squared(1.0, 2.0, 3.0));
    d << "compression " << format_double(l.compression) << ", expansion "
      << format_double(l.expansion);
    return true;
  });
}

void bounds_checks(Suite& suite) {
  suite.add("bound_ordering", [](std::ostringstream& d) {
    for (double tau : kTauGrid) {
      for (double vv : velocity_grid()) {
        const BoundsReport b = bounds_report(tau, Velocity(vv));
        const bool ok = b.eta_ss_mw <= b.eta_ss_upper && b.eta_ss_upper < 0.5 &&
                        b.eta_mw_adiabatic <= b.eta_gen_carnot && b.eta_gen_carnot < 1.0 &&
                        b.eta_carnot <= b.eta_gen_carnot;
        if (!ok) {
          d << "ordering fails at tau=" << tau << " v=" << vv;
          return false;
        }
      }
    }
    return true;
  });

  suite.add("sudden_bounds_below_adiabatic", [](std::ostringstream& d) {
    for (double tau : kTauGrid) {
      for (double vv : velocity_grid()) {
        const Velocity v(vv);
        if (!(eta_ss_upper(1.0 - tau, v) <= generalized_carnot(tau, v))) {
          d << "fails at tau=" << tau << " v=" << vv;
          return false;
        }
      }
    }
    return true;
  });

  suite.add("argmax_invariance", [](std::ostringstream& d) {
    double worst = 0.0;
    for (auto regime : {DrivingRegime::adiabatic, DrivingRegime::sudden}) {
      for (double tau : kTauGrid) {
        for (double vv : velocity_grid()) {
          const auto m = maximum_work_point(regime, tau, Velocity(vv));
          worst = std::max(worst, std::abs(m.z_numeric - m.z_closed_form));
        }
      }
    }
    d << "max |z_numeric - z_closed| " << format_double(worst);
    return worst <= 1e-6;
  });

  suite.add("sudden_ceiling_is_high_t_maximum", [](std::ostringstream& d) {
    double worst = 0.0;
    for (double tau : kTauGrid) {
      for (double vv : velocity_grid()) {
        const Velocity v(vv);
        const double zmin = std::sqrt(pwc_threshold(DrivingRegime::sudden, tau, v));
        const auto best = maximize_scalar([&](double z) { return eta_ss_high_t(z, tau, v); },
                                          zmin, 1.0, 1e-12);
        worst = std::max(worst, std::abs(best.value - eta_ss_upper(1.0 - tau, v)));
      }
    }
    d << "max |max eta - ceiling| " << format_double(worst);
    return worst <= 1e-9;
  });

  suite.add("carnot_crossing", [](std::ostringstream& d) {
    const double up = eta_ss_upper(0.05, Velocity(0.9));
    d << "eta_ss_upper(0.05, 0.9) = " << format_double(up);
    return up > 0.05;
  });

  suite.add("z_squared_round_trip", [](std::ostringstream& d) {
    double worst = 0.0;
    for (double tau : {0.1, 0.25, 0.5, 0.75}) {
      for (double vv : {0.0, 0.5, 0.9}) {
        const Velocity v(vv);
        const double zmin = std::sqrt(pwc_threshold(DrivingRegime::sudden, tau, v));
        for (int k = 1; k < 10; ++k) {
          const double z = zmin + (1.0 - zmin) * k / 10.0;
          const double eta = eta_ss_high_t(z, tau, v);
          for (auto branch : {RootBranch::lower, RootBranch::upper}) {
            const double z2 = z_squared_from_eta(eta, tau, v, branch);
            worst = std::max(worst, std::abs(eta_ss_high_t(std::sqrt(z2), tau, v) - eta));
          }
        }
      }
    }
    d << "max round-trip error " << format_double(worst);
    return worst <= 1e-9;
  });
}

void verify_checks(Suite& suite, const SelfCheckOptions& opt) {
  suite.add("solid_angle_quadrature", [](std::ostringstream& d) {
    double worst = 0.0;
    for (int i = 2; i <= 19; ++i) {
      const double vv = 0.05 * i;
      const double closed = std::log((1.0 + vv) / (1.0 - vv)) / (2.0 * vv);
      worst = std::max(worst,
                       std::abs(solid_angle_average_inverse_doppler(Velocity(vv)) - closed));
    }
    d << "max abs error " << format_double(worst);
    return worst <= 1e-10;
  });

  suite.add("high_t_convergence", [](std::ostringstream& d) {
    const std::array<double, 3> betas{1e-1, 1e-2, 1e-3};
    const auto ad = high_t_convergence(DrivingRegime::adiabatic, ConvergedQuantity::work, 0.7,
                                       0.5, Velocity(0.85), betas);
    const auto ss = high_t_convergence(DrivingRegime::sudden, ConvergedQuantity::efficiency, 0.7,
                                       0.25, Velocity(0.9), betas);
    auto decreasing = [](const std::vector<double>& e) {
      return std::is_sorted(e.rbegin(), e.rend()) && std::adjacent_find(e.begin(), e.end()) == e.end();
    };
    d << "adiabatic " << format_double(ad.back()) << ", sudden " << format_double(ss.back());
    return decreasing(ad) && decreasing(ss) && ss.back() < 1e-4;
  });

  if (!opt.include_ensembles) return;

  suite.add("fig3_no_violations", [&opt](std::ostringstream& d) {
    const SampleEnsemble e = run_scatter(fig3_preset(), opt.threads);
    EnsembleConfig control = fig3_preset();
    control.v = 0.0;
    const SampleEnsemble c = run_scatter(control, opt.threads);
    d << "violations " << e.violations << " (bound " << format_double(e.bound)
      << "), control " << c.violations;
    return e.violations == 0 && c.violations == 0 && !e.results.empty();
  });

  suite.add("fig5_no_violations", [&opt](std::ostringstream& d) {
    const HistogramRun r = run_histogram(fig5_preset(), 50, opt.threads);
    const double gap = r.ensemble.bound - r.ensemble.max_eta();
    d << "violations " << r.ensemble.violations << ", max eta "
      << format_double(r.ensemble.max_eta()) << ", gap " << format_double(gap);
    return r.ensemble.violations == 0 && gap < 0.02 &&
           r.histogram.total() == r.ensemble.results.size();
  });

  suite.add("randomized_configs_no_violations", [&opt](std::ostringstream& d) {
    SplitMix64 rng(314159);
    std::size_t total = 0;
    for (int i = 0; i < 20; ++i) {
      EnsembleConfig c;
      c.seed = rng();
      c.count = 100000;
      const double tau = 0.1 + 0.8 * rng.uniform_open();
      c.beta_h = 0.02 + 0.48 * rng.uniform_open();
      c.beta_c = c.beta_h / tau;
      c.v = 0.95 * rng.uniform_open();
      const auto s = run_scatter(c, opt.threads);
      const auto h = run_histogram(c, 50, opt.threads);
      total += s.violations + h.ensemble.violations;
      if (s.violations + h.ensemble.violations > 0) {
        d << "config " << i << " (tau=" << tau << ", v=" << c.v << ") violates; ";
      }
    }
    d << "total violations " << total;
    return total == 0;
  });

  suite.add("ensemble_determinism", [](std::ostringstream& d) {
    EnsembleConfig c = fig5_preset(7);
    c.count = 3 * kShardSize + 17;
    const auto a = run_histogram(c, 50, 1);
    const auto b = run_histogram(c, 50, 4);
    bool same = a.ensemble.results.size() == b.ensemble.results.size();
    for (std::size_t i = 0; same && i < a.ensemble.results.size(); ++i) {
      const Sample& x = a.ensemble.results[i];
      const Sample& y = b.ensemble.results[i];
      same = x.omega_c == y.omega_c && x.omega_h == y.omega_h && x.w_ext == y.w_ext &&
             x.eta == y.eta;
    }
    d << a.ensemble.results.size() << " samples, 1 vs 4 threads";
    return same && a.histogram.counts == b.histogram.counts;
  });
}

}  // namespace

std::vector<CheckOutcome> run_self_checks(const SelfCheckOptions& options) {
  Suite suite;
  thermo_checks(suite);
  adiabaticity_checks(suite);
  bounds_checks(suite);
  verify_checks(suite, options);
  return suite.take();
}

}  // namespace otto
