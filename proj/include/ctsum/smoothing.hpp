#pragma once

#include <complex>

#include "ctsum/arith.hpp"

namespace ctsum {

// Smoothed indicator windows on the unit circle.
//   two_sided: tent supported on (beta, beta + delta), peak 1/2 at the center
//   one_sided: ramp, 1 on [0, w), linear on (-w, 0), 0 elsewhere
struct SmoothedWindow {
  enum class Kind { kTwoSided, kOneSided };
  Kind kind = Kind::kTwoSided;
  double beta = 0.0;   // anchor (two_sided)
  double delta = 0.1;  // width (two_sided), 0 < delta < 1
  double w = 0.1;      // halfwidth (one_sided), 0 < w < 1/2

  static SmoothedWindow two_sided(double beta, double delta);
  static SmoothedWindow one_sided(double w);
};

// tent evaluated from the printed definition: max(0, min(u-beta, beta+delta-u))/delta
double chi2(double u, const SmoothedWindow& win);

// ramp from the printed definition: 1 on [0, w), (u+w)/w on (-w, 0)
double chi4(double u, const SmoothedWindow& win);

// The printed definitions integrate to delta/4 resp. 3w/2, while the quoted
// coefficient statements assert delta/2 resp. w. Both values are carried;
// evaluation is definition-faithful and the quoted constant is metadata.
struct ZeroModeInfo {
  double definition_value = 0.0;
  double quoted_value = 0.0;
};

ZeroModeInfo fourier_a0_info(const SmoothedWindow& win);
ZeroModeInfo fourier_c0_info(const SmoothedWindow& win);

// exact n-th Fourier coefficient of the tent (modulated squared sinc)
std::complex<double> fourier_a(i64 n, const SmoothedWindow& win);

// exact n-th Fourier coefficient of the ramp
std::complex<double> fourier_c(i64 n, const SmoothedWindow& win);

// truncated synthesis sum_{|n| <= n_max} a(n) e(nu) (real by conjugate symmetry)
double reconstruct(double u, const SmoothedWindow& win, i64 n_max);

// integral of the squared window over one period (closed form)
double window_l2_squared(const SmoothedWindow& win);

}  // namespace ctsum
