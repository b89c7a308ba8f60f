#include "ctsum/smoothing.hpp"

#include <cmath>

namespace ctsum {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

std::complex<double> unit_phase(double x) {  // e(x) = exp(2 pi i x)
  return {std::cos(kTwoPi * x), std::sin(kTwoPi * x)};
}
}  // namespace

SmoothedWindow SmoothedWindow::two_sided(double beta, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("window: delta must lie in (0, 1)");
  SmoothedWindow win;
  win.kind = Kind::kTwoSided;
  win.beta = beta;
  win.delta = delta;
  return win;
}

SmoothedWindow SmoothedWindow::one_sided(double w) {
  if (!(w > 0.0 && w < 0.5)) throw DomainError("window: halfwidth must lie in (0, 1/2)");
  SmoothedWindow win;
  win.kind = Kind::kOneSided;
  win.w = w;
  return win;
}

double chi2(double u, const SmoothedWindow& win) {
  if (win.kind != SmoothedWindow::Kind::kTwoSided) throw DomainError("chi2: wrong window kind");
  double s = u - win.beta;
  return std::max(0.0, std::min(s, win.delta - s)) / win.delta;
}

double chi4(double u, const SmoothedWindow& win) {
  if (win.kind != SmoothedWindow::Kind::kOneSided) throw DomainError("chi4: wrong window kind");
  if (u >= win.w || u <= -win.w) return 0.0;
  if (u >= 0.0) return 1.0;
  return (u + win.w) / win.w;
}

ZeroModeInfo fourier_a0_info(const SmoothedWindow& win) {
  return {win.delta / 4.0, win.delta / 2.0};
}

ZeroModeInfo fourier_c0_info(const SmoothedWindow& win) {
  return {1.5 * win.w, win.w};
}

std::complex<double> fourier_a(i64 n, const SmoothedWindow& win) {
  if (win.kind != SmoothedWindow::Kind::kTwoSided) throw DomainError("fourier_a: wrong window kind");
  if (n == 0) return {fourier_a0_info(win).definition_value, 0.0};
  // tent = (1/delta) * (box * box) with boxes of width delta/2:
  // a(n) = e(-n beta) (1 - e(-n delta/2))^2 / (delta (2 pi i n)^2)
  double nn = static_cast<double>(n);
  std::complex<double> box = 1.0 - unit_phase(-nn * win.delta / 2.0);
  std::complex<double> denom(-win.delta * kTwoPi * kTwoPi * nn * nn, 0.0);  // (2 pi i n)^2 delta
  return unit_phase(-nn * win.beta) * box * box / denom;
}

std::complex<double> fourier_c(i64 n, const SmoothedWindow& win) {
  if (win.kind != SmoothedWindow::Kind::kOneSided) throw DomainError("fourier_c: wrong window kind");
  if (n == 0) return {fourier_c0_info(win).definition_value, 0.0};
  // c(n) = -e(-n w)/(2 pi i n) + (e(n w) - 1)/(w (2 pi i n)^2)
  double nn = static_cast<double>(n);
  std::complex<double> i2pin(0.0, kTwoPi * nn);
  std::complex<double> t1 = -unit_phase(-nn * win.w) / i2pin;
  std::complex<double> t2 = (unit_phase(nn * win.w) - 1.0) / (win.w * i2pin * i2pin);
  return t1 + t2;
}

double reconstruct(double u, const SmoothedWindow& win, i64 n_max) {
  if (n_max < 1) throw DomainError("reconstruct: n_max must be >= 1");
  bool tent = (win.kind == SmoothedWindow::Kind::kTwoSided);
  double acc = tent ? fourier_a0_info(win).definition_value : fourier_c0_info(win).definition_value;
  double comp = 0.0;
  for (i64 n = 1; n <= n_max; ++n) {
    std::complex<double> coeff = tent ? fourier_a(n, win) : fourier_c(n, win);
    // a(-n) = conj(a(n)): the pair contributes 2 Re(a(n) e(nu))
    double term = 2.0 * (coeff * unit_phase(static_cast<double>(n) * u)).real();
    double y = term - comp;
    double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
  }
  return acc;
}

double window_l2_squared(const SmoothedWindow& win) {
  if (win.kind == SmoothedWindow::Kind::kTwoSided) {
    // int of tent^2 = delta/12
    return win.delta / 12.0;
  }
  // ramp: 1 on [0,w) plus int_0^w (s/w)^2 ds = w + w/3
  return win.w + win.w / 3.0;
}

}  // namespace ctsum
