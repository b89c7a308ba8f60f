#include "ctsum/zeta.hpp"

#include <cmath>

namespace ctsum {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
const DD kTwoPiDD{6.283185307179586, 2.4492935982947064e-16};

// B_{2k}/(2k)! for k = 1..16 from the exact fractions
long double bern_over_fact(int k) {
  static const long double num[] = {1.0L,     -1.0L,    1.0L,       -1.0L,        5.0L,
                                    -691.0L,  7.0L,     -3617.0L,   43867.0L,     -174611.0L,
                                    854513.0L, -236364091.0L, 8553103.0L, -23749461029.0L,
                                    8615841276005.0L, -7709321041217.0L};
  static const long double den[] = {6.0L,   30.0L,  42.0L,  30.0L,  66.0L,  2730.0L,
                                    6.0L,   510.0L, 798.0L, 330.0L, 138.0L, 2730.0L,
                                    6.0L,   870.0L, 14322.0L, 510.0L};
  long double fact = 1.0L;
  for (int j = 2; j <= 2 * k; ++j) fact *= j;
  return num[k - 1] / (den[k - 1] * fact);
}

}  // namespace

ZetaEvaluator::ZetaEvaluator(double t_budget) : t_budget_(t_budget) {
  if (!(t_budget > 0) || t_budget > 2e5) {
    throw DomainError("ZetaEvaluator: t budget must lie in (0, 2e5]");
  }
  n_max_ = static_cast<i64>(std::ceil(2.5 * t_budget / kTwoPi)) + 32;
  n_max_ = std::max<i64>(n_max_, 4096);
  ln_.resize(static_cast<size_t>(n_max_) + 1);
  mpfr_t x;
  mpfr_init2(x, 120);
  Real tmp(120);
  for (i64 n = 1; n <= n_max_; ++n) {
    mpfr_set_si(x, n, MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    mpfr_set(tmp.raw(), x, MPFR_RNDN);
    ln_[static_cast<size_t>(n)] = dd_from_real(tmp);
  }
  mpfr_clear(x);
}

std::pair<double, double> ZetaEvaluator::phase_cos_sin(double t, i64 n) const {
  DD prod = dd_mul_d(ln_[static_cast<size_t>(n)], t);
  double q = std::nearbyint(prod.hi / kTwoPi);
  DD red = dd_sub(prod, dd_mul_d(kTwoPiDD, q));
  double c = std::cos(red.hi);
  double s = std::sin(red.hi);
  // first-order correction from the low word
  return {c - red.lo * s, s + red.lo * c};
}

ZetaEvaluator::Value ZetaEvaluator::em_eval(double t) const {
  const std::complex<double> s(0.5, t);
  i64 N = std::max<i64>(16, static_cast<i64>(std::ceil(2.5 * t / kTwoPi)) + 8);

  // main sum over n < N with compensated accumulation
  double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
  for (i64 n = 1; n < N; ++n) {
    auto [c, sn] = phase_cos_sin(t, n);
    double r = 1.0 / std::sqrt(static_cast<double>(n));
    double re = r * c, im = -r * sn;  // n^{-s} = n^{-1/2} e^{-i t ln n}
    double y = re - cr;
    double tt = sr + y;
    cr = (tt - sr) - y;
    sr = tt;
    y = im - ci;
    tt = si + y;
    ci = (tt - si) - y;
    si = tt;
  }
  std::complex<double> acc(sr, si);

  auto [cN, sN] = phase_cos_sin(t, N);
  double rsqrtN = 1.0 / std::sqrt(static_cast<double>(N));
  std::complex<double> n_minus_s = rsqrtN * std::complex<double>(cN, -sN);

  // N^{1-s}/(s-1) and N^{-s}/2
  std::complex<double> n_one_minus_s =
      std::sqrt(static_cast<double>(N)) * std::complex<double>(cN, -sN);
  acc += n_one_minus_s / (s - 1.0);
  acc += 0.5 * n_minus_s;

  // Bernoulli corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  std::complex<double> poch = s;
  std::complex<double> cpow = n_minus_s / static_cast<double>(N);
  double last_mag = 0.0;
  double dN = static_cast<double>(N);
  for (int k = 1; k <= 16; ++k) {
    std::complex<double> term = static_cast<double>(bern_over_fact(k)) * poch * cpow;
    acc += term;
    last_mag = std::abs(term);
    if (last_mag < 1e-19 * std::abs(acc)) break;
    poch *= (s + std::complex<double>(2.0 * k - 1.0, 0.0)) *
            (s + std::complex<double>(2.0 * k, 0.0));
    cpow /= dN * dN;
  }

  Value v;
  v.z = acc;
  v.error_bound = 4.0 * last_mag + 9e-16 * std::sqrt(static_cast<double>(N)) +
                  2e-16 * std::abs(acc);
  return v;
}

ZetaEvaluator::Value ZetaEvaluator::eta_eval(double t) const {
  // n from the alternating-series acceleration error ~ (3+sqrt 8)^{-n} e^{pi t / 2}
  const long double kLnQ = 1.7627471740390860505L;  // ln(3 + sqrt 8)
  long double need = (40.0L + 1.5707963267948966L * static_cast<long double>(t) +
                      logl(1.0L + 2.0L * static_cast<long double>(t))) /
                     kLnQ;
  i64 n = static_cast<i64>(ceill(need)) + 8;
  if (n + 1 > n_max_) throw ResourceError("zeta eta route: acceleration order exceeds table");

  const std::complex<double> s(0.5, t);
  long double d = powl(3.0L + sqrtl(8.0L), static_cast<long double>(n));
  d = (d + 1.0L / d) / 2.0L;
  long double b = -1.0L;
  long double c = -d;
  std::complex<long double> acc(0.0L, 0.0L);
  for (i64 k = 0; k < n; ++k) {
    c = b - c;
    auto [cs, sn] = phase_cos_sin(t, k + 1);
    long double r = 1.0L / sqrtl(static_cast<long double>(k + 1));
    std::complex<long double> ak(r * cs, -r * sn);
    acc += c * ak;
    long double kk = static_cast<long double>(k);
    long double nn = static_cast<long double>(n);
    b = (kk + nn) * (kk - nn) * b / ((kk + 0.5L) * (kk + 1.0L));
  }
  std::complex<long double> eta = acc / d;

  // zeta = eta / (1 - 2^{1-s}); 2^{1-s} = sqrt 2 e^{-i t ln 2}
  long double ln2 = 0.69314718055994530942L;
  long double ph = static_cast<long double>(t) * ln2;
  ph = fmodl(ph, 2.0L * 3.14159265358979323846L);
  std::complex<long double> two1ms(sqrtl(2.0L) * cosl(ph), -sqrtl(2.0L) * sinl(ph));
  std::complex<long double> z = eta / (1.0L - two1ms);

  Value v;
  v.z = std::complex<double>(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  v.error_bound = 1e-13 * (1.0 + std::abs(v.z)) + 1e-15 * static_cast<double>(n);
  return v;
}

ZetaEvaluator::Value ZetaEvaluator::zeta_half(double t) const {
  if (std::fabs(t) > t_budget_) {
    throw ResourceError("zeta_half: |t| = " + std::to_string(std::fabs(t)) +
                        " exceeds the evaluator budget " + std::to_string(t_budget_));
  }
  if (t < 0) {
    Value v = em_eval(-t);
    v.z = std::conj(v.z);
    return v;
  }
  return em_eval(t);
}

ZetaEvaluator::Value ZetaEvaluator::zeta_half_eta(double t) const {
  if (std::fabs(t) > 2000.0) {
    throw ResourceError("zeta_half_eta: the acceleration route is limited to |t| <= 2000");
  }
  if (t < 0) {
    Value v = eta_eval(-t);
    v.z = std::conj(v.z);
    return v;
  }
  return eta_eval(t);
}

}  // namespace ctsum
