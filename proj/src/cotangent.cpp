#include "ctsum/cotangent.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace ctsum {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t psi_key(i64 p, i64 q) {
  return (static_cast<std::uint64_t>(p) << 32) | static_cast<std::uint64_t>(q);
}

// numerically-rational guard for g: x counts as rational when a convergent
// p/q with q <= qmax matches it to within a few ulps (true rationals stored
// in a double are within ulp/2 of the intended value; even the golden ratio
// stays ~1e-13 away from all such p/q).
bool is_low_rational(double x, i64 qmax) {
  double y = x - std::floor(x);
  double tol = 8.0 * 2.220446049250313e-16 * std::max(1.0, std::fabs(x));
  if (y < tol || 1.0 - y < tol) return true;
  i64 p_prev = 1, q_prev = 0, p_cur = 0, q_cur = 1;
  double frac = y;
  for (int iter = 0; iter < 64; ++iter) {
    frac = 1.0 / frac;
    double ai = std::floor(frac);
    if (ai > 4e18) break;
    i64 a = static_cast<i64>(ai);
    i64 p_next = a * p_cur + p_prev;
    i64 q_next = a * q_cur + q_prev;
    if (q_next > qmax || q_next < 0) break;
    p_prev = p_cur; q_prev = q_cur; p_cur = p_next; q_cur = q_next;
    if (std::fabs(y - static_cast<double>(p_cur) / static_cast<double>(q_cur)) < tol) return true;
    frac -= ai;
    if (frac < 1e-18) return true;  // expansion terminated
  }
  return false;
}

}  // namespace

CotangentEvaluator::CotangentEvaluator(int prec_bits, i64 psi_denominator_budget)
    : prec_(prec_bits), psi_budget_(psi_denominator_budget), pi_(const_pi(prec_bits)) {}

// Shared kernel for the two direct sums. Terms for m = 1..mmax:
//   weights_from_angle = false (c0):  ((b-2m)/b) * cot(pi * red(m r mod b) / b)
//   weights_from_angle = true  (V) :  ((2a-b)/b) * cot(pi * m / b), a = m r mod b
// red() maps to (-b/2, b/2]; terms whose cotangent argument is pi/2 vanish.
HpScalar CotangentEvaluator::paired_cot_sum(i64 b, i64 mmax, bool weights_from_angle, i64 r) const {
  mpfr_t ang, tn, t2, acc;
  mpfr_init2(ang, prec_);
  mpfr_init2(tn, prec_);
  mpfr_init2(t2, prec_);
  mpfr_init2(acc, prec_);
  mpfr_set_zero(acc, 1);

  double abs_sum = 0.0;
  i64 n_terms = 0;
  for (i64 m = 1; m <= mmax; ++m) {
    i64 a = static_cast<i64>((static_cast<i128>(m) * r) % b);
    i64 weight_num, angle_num;
    if (weights_from_angle) {
      weight_num = 2 * a - b;
      angle_num = m;
    } else {
      if (2 * a > b) a -= b;
      if (2 * a == b) continue;  // cot(pi/2) = 0
      weight_num = b - 2 * m;
      angle_num = a;
    }
    if (2 * angle_num == b) continue;
    mpfr_mul_si(ang, pi_.raw(), angle_num, MPFR_RNDN);
    mpfr_div_si(ang, ang, b, MPFR_RNDN);
    mpfr_tan(tn, ang, MPFR_RNDN);
    mpfr_si_div(t2, weight_num, tn, MPFR_RNDN);
    mpfr_add(acc, acc, t2, MPFR_RNDN);
    abs_sum += std::fabs(mpfr_get_d(t2, MPFR_RNDN));
    ++n_terms;
  }
  mpfr_div_si(acc, acc, b, MPFR_RNDN);

  Real value(prec_);
  mpfr_set(value.raw(), acc, MPFR_RNDN);
  mpfr_clears(ang, tn, t2, acc, static_cast<mpfr_ptr>(nullptr));

  double eb = (abs_sum / static_cast<double>(b)) * std::ldexp(1.0, -prec_) *
              (16.0 + 2.0 * static_cast<double>(n_terms));
  return HpScalar(std::move(value), eb);
}

HpScalar CotangentEvaluator::c0_at(i64 r, i64 b) const {
  if (b == 1) return HpScalar(Real::from_si(0, prec_), 0.0);
  i64 mmax = (b % 2 == 0) ? b / 2 - 1 : (b - 1) / 2;
  return paired_cot_sum(b, mmax, /*weights_from_angle=*/false, r);
}

HpScalar CotangentEvaluator::c0_direct(ReducedFraction f) const { return c0_at(f.num, f.den); }

HpScalar CotangentEvaluator::vasyunin(ReducedFraction f) const {
  i64 b = f.den;
  i64 mmax = (b % 2 == 0) ? b / 2 - 1 : (b - 1) / 2;
  return paired_cot_sum(b, mmax, /*weights_from_angle=*/true, f.num);
}

HpScalar CotangentEvaluator::dsin1_partial(ReducedFraction x, i64 n_terms, Smoothing smoothing) const {
  if (n_terms < 1) throw DomainError("dsin1_partial: n_terms must be >= 1");
  if (n_terms > 20'000'000) {
    throw ResourceError("dsin1_partial: n_terms " + std::to_string(n_terms) +
                        " exceeds the 2e7 table budget");
  }
  auto d = divisor_count_table(n_terms);
  i64 q = x.den;
  std::vector<double> sin_tab;
  if (q <= 4'000'000) {
    sin_tab.resize(static_cast<size_t>(q));
    for (i64 k = 0; k < q; ++k) {
      // sin(2 pi k / q); exact zeros where the angle is 0 or pi
      sin_tab[static_cast<size_t>(k)] =
          (k == 0 || 2 * k == q)
              ? 0.0
              : std::sin(2.0 * kPi * static_cast<double>(k) / static_cast<double>(q));
    }
  }

  double s = 0.0, comp = 0.0;           // Kahan partial sum
  double ces = 0.0;                     // running sum of S_j over the tail window
  i64 ces_count = 0;
  i64 half = n_terms / 2;
  double last_term = 0.0;
  for (i64 n = 1; n <= n_terms; ++n) {
    i64 k = static_cast<i64>((static_cast<i128>(n) * x.num) % q);
    double sv;
    if (k == 0 || 2 * k == q) {
      sv = 0.0;
    } else {
      sv = sin_tab.empty()
               ? std::sin(2.0 * kPi * static_cast<double>(k) / static_cast<double>(q))
               : sin_tab[static_cast<size_t>(k)];
    }
    double term = static_cast<double>(d[static_cast<size_t>(n)]) * sv / static_cast<double>(n);
    double y = term - comp;
    double t = s + y;
    comp = (t - s) - y;
    s = t;
    if (term != 0.0) last_term = term;
    if (smoothing == Smoothing::kCesaro && n > half) {
      ces += s;
      ++ces_count;
    }
  }

  double value, eb;
  if (smoothing == Smoothing::kCesaro && ces_count > 0) {
    value = ces / static_cast<double>(ces_count);
    eb = std::fabs(value - s);  // gap between smoothed value and last raw partial
  } else {
    value = s;
    eb = 2.0 * std::fabs(last_term);
  }
  eb += 1e-15 * (1.0 + std::fabs(value)) + 1e-16 * static_cast<double>(n_terms) * 0.01;
  return HpScalar(Real::from_double(value, prec_), eb);
}

HpScalar CotangentEvaluator::g_partial(double x, i64 n_terms, bool reject_rational) const {
  if (n_terms < 1) throw DomainError("g_partial: n_terms must be >= 1");
  if (reject_rational && is_low_rational(x, 1'000'000)) {
    throw DomainError("g_partial: x is numerically rational (denominator <= 1e6); "
                      "the series diverges at rationals");
  }
  double s = 0.0, comp = 0.0;
  for (i64 l = 1; l <= n_terms; ++l) {
    double lx = static_cast<double>(l) * x;
    double frac = lx - std::floor(lx);
    double term = (1.0 - 2.0 * frac) / static_cast<double>(l);
    double y = term - comp;
    double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  // {lx} carries ~|l x| eps of absolute error, term error ~ 2 x eps each
  double eb = 2.0 * std::fabs(x) * static_cast<double>(n_terms) * 2.3e-16 +
              (std::log(static_cast<double>(n_terms)) + 2.0) * 1e-16;
  return HpScalar(Real::from_double(s, prec_), eb);
}

HpScalar CotangentEvaluator::psi(i64 p, i64 q) {
  if (q == 1) {
    // unit endpoint: base formula with the empty sum at denominator 1
    HpScalar one_over_pi = HpScalar::exact_si(1, prec_) / HpScalar(pi_, ulp_scale(pi_));
    return -one_over_pi;
  }
  if (q < 1 || p < 1 || p >= q || gcd64(p, q) != 1) {
    throw DomainError("psi: argument " + std::to_string(p) + "/" + std::to_string(q) +
                      " must be a reduced fraction in (0,1)");
  }
  if (q > psi_budget_) {
    throw ResourceError("psi: denominator " + std::to_string(q) +
                        " exceeds the direct-sum budget " + std::to_string(psi_budget_) +
                        "; raise the budget or lower the precision/size");
  }
  std::uint64_t key = psi_key(p, q);
  {
    std::shared_lock lock(psi_mutex_);
    auto it = psi_cache_.find(key);
    if (it != psi_cache_.end()) return it->second;
  }

  auto cf = ContinuedFraction::expand(ReducedFraction{p, q});
  int k = cf.levels();
  // reversed expansion; its convergent denominators end at q
  std::vector<i64> rev(cf.coeffs.rbegin(), cf.coeffs.rend());
  std::vector<Convergent> conv{{0, 1}};
  i64 u_prev = 1, v_prev = 0;
  for (i64 a : rev) {
    Convergent last = conv.back();
    conv.push_back(Convergent{a * last.u + u_prev, a * last.v + v_prev});
    u_prev = last.u;
    v_prev = last.v;
  }
  i64 xu = conv[static_cast<size_t>(k)].u;

  HpScalar c0x = c0_at(mod_inverse(xu % q, q).canonical, q);
  HpScalar qh = HpScalar::exact_si(q, prec_);
  HpScalar tail = -(c0x / qh);
  for (int l = 1; l < k; ++l) {
    i64 vp = conv[static_cast<size_t>(l) - 1].v;
    i64 vc = conv[static_cast<size_t>(l)].v;
    HpScalar vch = HpScalar::exact_si(vc, prec_);
    HpScalar inner = HpScalar::exact_si(1, prec_) / (HpScalar(pi_, ulp_scale(pi_)) * vch) + psi(vp, vc);
    HpScalar contrib = inner / vch;
    tail = (l % 2 == 0) ? tail - contrib : tail + contrib;  // subtract (-1)^l * contrib
  }
  HpScalar value = tail.scaled_si((k % 2 == 0) ? q : -q) -
                   HpScalar::exact_si(1, prec_) / (HpScalar(pi_, ulp_scale(pi_)) * qh);

  {
    std::unique_lock lock(psi_mutex_);
    auto it = psi_cache_.emplace(key, value).first;  // first writer wins
    return it->second;
  }
}

HpScalar CotangentEvaluator::psi_via_extended_parent(i64 p, i64 q, i64 extra_coeff) {
  if (q < 2 || p < 1 || p >= q || gcd64(p, q) != 1) {
    throw DomainError("psi_via_extended_parent: invalid fraction");
  }
  if (extra_coeff < 2) throw DomainError("psi_via_extended_parent: extra coefficient must be >= 2");
  auto cf = ContinuedFraction::expand(ReducedFraction{p, q});
  int k = cf.levels();
  std::vector<i64> rev(cf.coeffs.rbegin(), cf.coeffs.rend());
  rev.push_back(extra_coeff);
  std::vector<Convergent> conv{{0, 1}};
  i64 u_prev = 1, v_prev = 0;
  for (i64 a : rev) {
    Convergent last = conv.back();
    conv.push_back(Convergent{a * last.u + u_prev, a * last.v + v_prev});
    u_prev = last.u;
    v_prev = last.v;
  }
  i64 qq = conv[static_cast<size_t>(k) + 1].v;
  if (qq > psi_budget_) throw ResourceError("psi_via_extended_parent: parent denominator over budget");
  if (conv[static_cast<size_t>(k)].v != q) throw DomainError("psi_via_extended_parent: internal ratio mismatch");
  i64 xu = conv[static_cast<size_t>(k) + 1].u;

  HpScalar c0x = c0_at(mod_inverse(xu % qq, qq).canonical, qq);
  HpScalar tail = -(c0x / HpScalar::exact_si(qq, prec_));
  for (int l = 1; l <= k + 1; ++l) {
    if (l == k) continue;  // the unknown level
    i64 vp = conv[static_cast<size_t>(l) - 1].v;
    i64 vc = conv[static_cast<size_t>(l)].v;
    i64 g = gcd64(vp, vc);
    HpScalar vch = HpScalar::exact_si(vc, prec_);
    HpScalar inner = HpScalar::exact_si(1, prec_) / (HpScalar(pi_, ulp_scale(pi_)) * vch) + psi(vp / g, vc / g);
    HpScalar contrib = inner / vch;
    tail = (l % 2 == 0) ? tail - contrib : tail + contrib;
  }
  return tail.scaled_si((k % 2 == 0) ? q : -q) -
         HpScalar::exact_si(1, prec_) / (HpScalar(pi_, ulp_scale(pi_)) * HpScalar::exact_si(q, prec_));
}

HpScalar TermSpectrum::reconstruct(i64 scale, int prec_bits) const {
  HpScalar sum(Real::from_si(0, prec_bits), 0.0);
  for (const TermLevel& tl : levels) {
    sum = (tl.level % 2 == 0) ? sum + tl.term : sum - tl.term;
  }
  return sum.scaled_si(-scale);
}

TermSpectrum CotangentEvaluator::build_spectrum(ReducedFraction source, double eps) {
  TermSpectrum spec;
  spec.source = source;
  spec.eps = eps;
  double b = static_cast<double>(source.den);
  spec.loglog_threshold = (b > std::exp(1.0)) ? std::log(std::log(b)) : -1e300;
  spec.epslog_threshold = eps * std::log(b);

  auto cf = ContinuedFraction::expand(source);
  HpScalar pih(pi_, ulp_scale(pi_));
  for (int l = 1; l <= cf.levels(); ++l) {
    auto [vp, vc] = cf.level_ratio(l);
    i64 g = gcd64(vp, vc);
    TermLevel tl{l, vp, vc, psi(vp / g, vc / g), HpScalar(prec_), 0.0};
    HpScalar vch = HpScalar::exact_si(vc, prec_);
    tl.term = (HpScalar::exact_si(1, prec_) / (pih * vch) + tl.psi) / vch;
    tl.psi_over_v = tl.psi.to_double() / static_cast<double>(vc);
    if (tl.psi_over_v >= spec.loglog_threshold) spec.n_loglog++;
    if (tl.psi_over_v >= spec.epslog_threshold) spec.n_epslog++;
    spec.levels.push_back(std::move(tl));
  }
  return spec;
}

TermSpectrum CotangentEvaluator::term_spectrum(ReducedFraction f, double eps) {
  return build_spectrum(f, eps);
}

TermSpectrum CotangentEvaluator::lemma_diagnostics(ReducedFraction f, double eps, i64 min_b) {
  if (f.den < min_b) {
    throw DomainError("lemma_diagnostics: denominator " + std::to_string(f.den) +
                      " is below the diagnostic threshold " + std::to_string(min_b));
  }
  return build_spectrum(f, eps);
}

std::pair<HpScalar, TermSpectrum> CotangentEvaluator::c0_via_cf(ReducedFraction f) {
  i64 rbar = mod_inverse(f.num, f.den).canonical;
  TermSpectrum spec = build_spectrum(ReducedFraction{rbar, f.den}, 0.1);
  HpScalar value = spec.reconstruct(f.den, prec_);
  return {std::move(value), std::move(spec)};
}

i64 CotangentEvaluator::psi_cache_size() const {
  std::shared_lock lock(psi_mutex_);
  return static_cast<i64>(psi_cache_.size());
}

}  // namespace ctsum
