#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "ctsum/smoothing.hpp"

using namespace ctsum;

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// Gauss-Legendre 20-point rule on [a, b]; exact far beyond 1e-12 for the
// smooth pieces of the windows times low-order trig.
std::complex<double> gl_integrate(double a, double b, i64 n, auto&& f) {
  static const double x[] = {
      -0.9931285991850949, -0.9639719272779138, -0.9122344282513259, -0.8391169718222188,
      -0.7463319064601508, -0.6360536807265150, -0.5108670019508271, -0.3737060887154195,
      -0.2277858511416451, -0.0765265211334973, 0.0765265211334973,  0.2277858511416451,
      0.3737060887154195,  0.5108670019508271,  0.6360536807265150,  0.7463319064601508,
      0.8391169718222188,  0.9122344282513259,  0.9639719272779138,  0.9931285991850949};
  static const double wt[] = {
      0.0176140071391521, 0.0406014298003869, 0.0626720483341091, 0.0832767415767048,
      0.1019301198172404, 0.1181945319615184, 0.1316886384491766, 0.1420961093183820,
      0.1491729864726037, 0.1527533871307258, 0.1527533871307258, 0.1491729864726037,
      0.1420961093183820, 0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
      0.0832767415767048, 0.0626720483341091, 0.0406014298003869, 0.0176140071391521};
  std::complex<double> acc = 0.0;
  double mid = (a + b) / 2, half = (b - a) / 2;
  for (int i = 0; i < 20; ++i) {
    double u = mid + half * x[i];
    acc += wt[i] * f(u) * std::complex<double>(std::cos(kTwoPi * n * u), -std::sin(kTwoPi * n * u));
  }
  return acc * half;
}

}  // namespace

TEST_CASE("chi2 closed form") {
  auto win = SmoothedWindow::two_sided(0.3, 0.2);
  CHECK(chi2(0.3 + 0.1, win) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(chi2(0.3 + 0.05, win) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(chi2(0.29, win) == 0.0);
  CHECK(chi2(0.51, win) == 0.0);
  for (double u = 0.0; u < 1.0; u += 0.001) {
    double v = chi2(u, win);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    if (!(u > win.beta && u <= win.beta + win.delta)) CHECK(v == 0.0);
  }
}

TEST_CASE("chi4 closed form") {
  auto win = SmoothedWindow::one_sided(0.15);
  CHECK(chi4(0.075, win) == 1.0);
  CHECK(chi4(-0.075, win) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(chi4(0.15, win) == 0.0);
  CHECK(chi4(-0.15, win) == 0.0);
  for (double u = -0.5; u < 0.5; u += 0.001) {
    double v = chi4(u, win);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    if (!(u > -win.w && u < win.w)) CHECK(v == 0.0);
  }
}

TEST_CASE("zero modes surface the definition/quoted discrepancy") {
  auto tw = SmoothedWindow::two_sided(0.1, 0.2);
  auto a0 = fourier_a0_info(tw);
  CHECK(a0.definition_value == doctest::Approx(0.05));   // delta/4 from the definition
  CHECK(a0.quoted_value == doctest::Approx(0.1));        // delta/2 as quoted
  CHECK(fourier_a(0, tw).real() == a0.definition_value); // evaluation is definition-faithful

  auto os = SmoothedWindow::one_sided(0.2);
  auto c0 = fourier_c0_info(os);
  CHECK(c0.definition_value == doctest::Approx(0.3));    // 3w/2 from the definition
  CHECK(c0.quoted_value == doctest::Approx(0.2));        // w as quoted
  CHECK(fourier_c(0, os).real() == c0.definition_value);
}

TEST_CASE("closed-form coefficients match piecewise quadrature to 1e-12") {
  auto tw = SmoothedWindow::two_sided(0.3, 0.2);
  for (i64 n : {1, 2, 5, 11, 30}) {
    auto quad = gl_integrate(0.3, 0.4, n, [&](double u) { return chi2(u, tw); }) +
                gl_integrate(0.4, 0.5, n, [&](double u) { return chi2(u, tw); });
    auto closed = fourier_a(n, tw);
    CHECK(std::abs(quad - closed) < 1e-12);
  }

  auto os = SmoothedWindow::one_sided(0.15);
  for (i64 n : {1, 2, 7, 19}) {
    auto quad = gl_integrate(-0.15, 0.0, n, [&](double u) { return chi4(u, os); }) +
                gl_integrate(0.0, 0.15, n, [&](double u) { return chi4(u, os); });
    auto closed = fourier_c(n, os);
    CHECK(std::abs(quad - closed) < 1e-12);
  }
}

TEST_CASE("tent decay regimes with measured constants <= 1") {
  for (double delta : {1e-1, 1e-2, 1e-3}) {
    auto win = SmoothedWindow::two_sided(0.25, delta);
    i64 knee = static_cast<i64>(1.0 / delta);
    double c1 = 0.0;
    for (i64 n = 1; n <= knee; ++n) c1 = std::max(c1, std::abs(fourier_a(n, win)) / delta);
    CHECK(c1 <= 1.0);
    double c2 = 0.0;
    for (i64 n = knee + 1; n <= knee + 2000; ++n)
      c2 = std::max(c2, std::abs(fourier_a(n, win)) * delta * static_cast<double>(n) *
                            static_cast<double>(n));
    CHECK(c2 <= 1.0);
  }
}

TEST_CASE("parseval for the tent") {
  for (double delta : {1e-1, 1e-2}) {
    auto win = SmoothedWindow::two_sided(0.4, delta);
    double sum = fourier_a0_info(win).definition_value * fourier_a0_info(win).definition_value;
    for (i64 n = 1; n <= 100000; ++n) {
      double m = std::abs(fourier_a(n, win));
      sum += 2.0 * m * m;
    }
    CHECK(std::fabs(sum - window_l2_squared(win)) < 1e-6);
  }
}

TEST_CASE("reconstruction converges uniformly") {
  auto win = SmoothedWindow::two_sided(0.3, 0.1);
  double prev_sup = 1e300;
  for (i64 n_max : {100, 200, 400, 800, 1600, 3200, 6400, 10000}) {
    double sup = 0.0;
    for (int i = 0; i < 1000; ++i) {
      double u = static_cast<double>(i) / 1000.0;
      sup = std::max(sup, std::fabs(reconstruct(u, win, n_max) - chi2(u, win)));
    }
    if (n_max > 100) CHECK(sup < prev_sup);
    prev_sup = sup;
  }
  CHECK(prev_sup < 1e-2);

  // far outside the window the synthesis is tiny
  CHECK(std::fabs(reconstruct(0.9, win, 10000)) <= 1e-2);

  // grid mean equals a(0) by orthogonality
  double mean = 0.0;
  for (int i = 0; i < 1000; ++i) mean += reconstruct(static_cast<double>(i) / 1000.0, win, 500);
  mean /= 1000.0;
  CHECK(std::fabs(mean - fourier_a0_info(win).definition_value) < 1e-10);
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(SmoothedWindow::two_sided(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(SmoothedWindow::two_sided(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(SmoothedWindow::one_sided(0.5), DomainError);
  CHECK_THROWS_AS(chi2(0.5, SmoothedWindow::one_sided(0.1)), DomainError);
}
