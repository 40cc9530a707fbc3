#include "otto/report.hpp"

#include <cstdio>

namespace otto {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_scatter_csv(std::ostream& out, const SampleEnsemble& ensemble) {
  out << "omega_c,omega_h,w_ext,eta\n";
  for (const auto& s : ensemble.results) {
    out << format_double(s.omega_c) << ',' << format_double(s.omega_h) << ','
        << format_double(s.w_ext) << ',' << format_double(s.eta) << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const Histogram& histogram) {
  out << "bin_left,bin_right,count\n";
  const double width = histogram.bin_width();
  for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
    const double left = histogram.lo + width * static_cast<double>(i);
    const double right = i + 1 == histogram.counts.size() ? histogram.hi : left + width;
    out << format_double(left) << ',' << format_double(right) << ',' << histogram.counts[i]
        << '\n';
  }
}

}  // namespace otto
