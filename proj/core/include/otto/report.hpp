#pragma once

#include <ostream>
#include <string>

#include "otto/ensemble.hpp"

namespace otto {

/// %.17g: enough digits to round-trip any double.
std::string format_double(double x);

/// `omega_c,omega_h,w_ext,eta` with header, one row per accepted sample.
void write_scatter_csv(std::ostream& out, const SampleEnsemble& ensemble);

/// `bin_left,bin_right,count` with header.
void write_histogram_csv(std::ostream& out, const Histogram& histogram);

}  // namespace otto
