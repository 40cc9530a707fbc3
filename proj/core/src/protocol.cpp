#include "otto/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

namespace otto {

namespace {

void require_frequency(double omega, const char* name) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
  }
}

void require_duration(double duration) {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw std::invalid_argument("duration must be positive and finite");
  }
}

int sign(double x) { return (x > 0.0) - (x < 0.0); }

// Three-point end slope with the Fritsch-Carlson monotonicity fix.
double end_slope(double h0, double h1, double d0, double d1) {
  double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
  if (sign(s) != sign(d0)) {
    s = 0.0;
  } else if (sign(d0) != sign(d1) && std::abs(s) > 3.0 * std::abs(d0)) {
    s = 3.0 * d0;
  }
  return s;
}

std::vector<double> pchip_slopes(const std::vector<double>& t, const std::vector<double>& y) {
  const std::size_t n = t.size();
  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = t[k + 1] - t[k];
    delta[k] = (y[k + 1] - y[k]) / h[k];
  }

  std::vector<double> d(n, 0.0);
  if (n == 2) {
    d[0] = d[1] = delta[0];
    return d;
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (delta[k - 1] * delta[k] <= 0.0) continue;
    const double w1 = 2.0 * h[k] + h[k - 1];
    const double w2 = h[k] + 2.0 * h[k - 1];
    d[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
  }
  d[0] = end_slope(h[0], h[1], delta[0], delta[1]);
  d[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return d;
}

}  // namespace

std::string_view to_string(RampKind kind) noexcept {
  switch (kind) {
    case RampKind::sudden:
      return "sudden";
    case RampKind::linear_omega:
      return "linear_omega";
    case RampKind::linear_omega_squared:
      return "linear_omega_squared";
    case RampKind::tabulated:
      return "tabulated";
  }
  return "tabulated";
}

DriveProtocol DriveProtocol::sudden(double omega_start, double omega_end) {
  require_frequency(omega_start, "omega_start");
  require_frequency(omega_end, "omega_end");
  DriveProtocol p;
  p.kind_ = RampKind::sudden;
  p.omega_start_ = omega_start;
  p.omega_end_ = omega_end;
  p.duration_ = 0.0;
  p.breaks_ = {0.0};
  return p;
}

DriveProtocol DriveProtocol::linear_omega(double omega_start, double omega_end,
                                          double duration) {
  require_frequency(omega_start, "omega_start");
  require_frequency(omega_end, "omega_end");
  require_duration(duration);
  DriveProtocol p;
  p.kind_ = RampKind::linear_omega;
  p.omega_start_ = omega_start;
  p.omega_end_ = omega_end;
  p.duration_ = duration;
  p.breaks_ = {0.0, duration};
  return p;
}

DriveProtocol DriveProtocol::linear_omega_squared(double omega_start, double omega_end,
                                                  double duration) {
  DriveProtocol p = linear_omega(omega_start, omega_end, duration);
  p.kind_ = RampKind::linear_omega_squared;
  return p;
}

DriveProtocol DriveProtocol::constant(double omega0, double duration) {
  return linear_omega(omega0, omega0, duration);
}

DriveProtocol DriveProtocol::tabulated(std::vector<double> times, std::vector<double> omegas) {
  if (times.size() != omegas.size()) {
    throw std::invalid_argument("tabulated protocol: time and omega columns differ in length");
  }
  if (times.size() < 2) {
    throw std::invalid_argument("tabulated protocol needs at least two samples");
  }
  if (times.front() != 0.0) {
    throw std::invalid_argument("tabulated protocol must start at t = 0");
  }
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!std::isfinite(times[k])) throw std::invalid_argument("tabulated protocol: non-finite t");
    if (k > 0 && !(times[k] > times[k - 1])) {
      throw std::invalid_argument("tabulated protocol: t must be strictly increasing");
    }
    require_frequency(omegas[k], "tabulated omega");
  }

  DriveProtocol p;
  p.kind_ = RampKind::tabulated;
  p.omega_start_ = omegas.front();
  p.omega_end_ = omegas.back();
  p.duration_ = times.back();
  p.slopes_ = pchip_slopes(times, omegas);
  p.breaks_ = std::move(times);
  p.samples_ = std::move(omegas);
  return p;
}

double DriveProtocol::omega(double t) const {
  switch (kind_) {
    case RampKind::sudden:
      return t <= 0.0 ? omega_start_ : omega_end_;
    case RampKind::linear_omega: {
      const double s = std::clamp(t / duration_, 0.0, 1.0);
      return omega_start_ + (omega_end_ - omega_start_) * s;
    }
    case RampKind::linear_omega_squared:
      return std::sqrt(omega_squared(t));
    case RampKind::tabulated: {
      const double tc = std::clamp(t, 0.0, duration_);
      auto it = std::upper_bound(breaks_.begin(), breaks_.end(), tc);
      std::size_t k = static_cast<std::size_t>(it - breaks_.begin());
      k = std::clamp<std::size_t>(k, 1, breaks_.size() - 1) - 1;
      const double h = breaks_[k + 1] - breaks_[k];
      const double s = (tc - breaks_[k]) / h;
      const double s2 = s * s;
      const double s3 = s2 * s;
      const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
      const double h10 = s3 - 2.0 * s2 + s;
      const double h01 = -2.0 * s3 + 3.0 * s2;
      const double h11 = s3 - s2;
      return h00 * samples_[k] + h10 * h * slopes_[k] + h01 * samples_[k + 1] +
             h11 * h * slopes_[k + 1];
    }
  }
  return omega_end_;
}

double DriveProtocol::omega_squared(double t) const {
  if (kind_ == RampKind::linear_omega_squared) {
    const double s = std::clamp(t / duration_, 0.0, 1.0);
    const double a = omega_start_ * omega_start_;
    const double b = omega_end_ * omega_end_;
    return a + (b - a) * s;
  }
  const double w = omega(t);
  return w * w;
}

DriveProtocol DriveProtocol::reversed() const {
  switch (kind_) {
    case RampKind::sudden:
      return sudden(omega_end_, omega_start_);
    case RampKind::linear_omega:
      return linear_omega(omega_end_, omega_start_, duration_);
    case RampKind::linear_omega_squared:
      return linear_omega_squared(omega_end_, omega_start_, duration_);
    case RampKind::tabulated: {
      std::vector<double> t(breaks_.size()), w(samples_.size());
      for (std::size_t k = 0; k < t.size(); ++k) {
        const std::size_t j = t.size() - 1 - k;
        t[k] = duration_ - breaks_[j];
        w[k] = samples_[j];
      }
      return tabulated(std::move(t), std::move(w));
    }
  }
  return *this;
}

DriveProtocol parse_protocol_csv(std::istream& in) {
  std::vector<double> times, omegas;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;

  auto fail = [&](const std::string& what) {
    throw std::runtime_error("protocol CSV line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      fail("expected exactly two columns `t,omega`");
    }
    const std::string a = line.substr(0, comma);
    const std::string b = line.substr(comma + 1);
    char* end = nullptr;
    const double t = std::strtod(a.c_str(), &end);
    if (end == a.c_str() || a.find_first_not_of(" \t", end - a.c_str()) != std::string::npos) {
      fail("cannot parse t value '" + a + "'");
    }
    const double w = std::strtod(b.c_str(), &end);
    if (end == b.c_str() || b.find_first_not_of(" \t", end - b.c_str()) != std::string::npos) {
      fail("cannot parse omega value '" + b + "'");
    }
    if (!times.empty() && !(t > times.back())) fail("t must be strictly increasing");
    times.push_back(t);
    omegas.push_back(w);
  }
  if (!header_seen) throw std::runtime_error("protocol CSV is empty");

  try {
    return DriveProtocol::tabulated(std::move(times), std::move(omegas));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("protocol CSV: ") + e.what());
  }
}

DriveProtocol load_protocol_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open protocol file " + path.string());
  return parse_protocol_csv(in);
}

}  // namespace otto
