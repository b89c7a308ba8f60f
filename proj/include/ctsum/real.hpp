#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

#include "ctsum/arith.hpp"

namespace ctsum {

// digits -> mpfr precision in bits, with guard bits
inline int digits_to_bits(int digits) {
  return static_cast<int>(digits * 3.3219280948873626) + 17;
}

// RAII wrapper over mpfr_t. Every value carries its own precision; binary
// operators round to the wider operand's precision (MPFR_RNDN throughout).
class Real {
 public:
  explicit Real(int prec_bits) { mpfr_init2(v_, prec_bits); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from_si(i64 x, int prec_bits) {
    Real r(prec_bits);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real from_double(double x, int prec_bits) {
    Real r(prec_bits);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  // exact ratio p/q at the given precision
  static Real from_ratio(i64 p, i64 q, int prec_bits) {
    Real r(prec_bits);
    mpfr_set_si(r.v_, p, MPFR_RNDN);
    mpfr_div_si(r.v_, r.v_, q, MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits) const;

  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
  friend Real operator-(const Real& a) {
    Real r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend Real abs(const Real& a) {
    Real r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

 private:
  using MpfrBinop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static Real binop(const Real& a, const Real& b, MpfrBinop op) {
    Real r(std::max(a.precision(), b.precision()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

Real const_pi(int prec_bits);
Real const_euler(int prec_bits);
Real const_log_2pi(int prec_bits);
Real sqrt(const Real& a);
Real log(const Real& a);
Real pow_si(const Real& a, i64 e);

// unit-in-last-place scale of x at its own precision
inline double ulp_scale(const Real& x) {
  double m = std::fabs(x.to_double());
  return (m > 0 ? m : 1e-300) * std::ldexp(1.0, 1 - x.precision());
}

// Value with a tracked upper estimate of accumulated error. Combinators
// propagate bounds super-additively and add the rounding ulp of the result.
struct HpScalar {
  Real value;
  double error_bound = 0.0;

  HpScalar(Real v, double eb) : value(std::move(v)), error_bound(eb) {}
  explicit HpScalar(int prec_bits) : value(prec_bits) {}

  static HpScalar exact_si(i64 x, int prec_bits) {
    return HpScalar(Real::from_si(x, prec_bits), 0.0);
  }
  static HpScalar exact_ratio(i64 p, i64 q, int prec_bits) {
    HpScalar r(Real::from_ratio(p, q, prec_bits), 0.0);
    r.error_bound = ulp_scale(r.value);
    return r;
  }

  double to_double() const { return value.to_double(); }

  friend HpScalar operator+(const HpScalar& a, const HpScalar& b) {
    HpScalar r(a.value + b.value, 0.0);
    r.error_bound = a.error_bound + b.error_bound + ulp_scale(r.value);
    return r;
  }
  friend HpScalar operator-(const HpScalar& a, const HpScalar& b) {
    HpScalar r(a.value - b.value, 0.0);
    r.error_bound = a.error_bound + b.error_bound + ulp_scale(r.value);
    return r;
  }
  friend HpScalar operator*(const HpScalar& a, const HpScalar& b) {
    HpScalar r(a.value * b.value, 0.0);
    double am = std::fabs(a.to_double()), bm = std::fabs(b.to_double());
    r.error_bound = am * b.error_bound + bm * a.error_bound +
                    a.error_bound * b.error_bound + ulp_scale(r.value);
    return r;
  }
  friend HpScalar operator/(const HpScalar& a, const HpScalar& b) {
    HpScalar r(a.value / b.value, 0.0);
    double am = std::fabs(a.to_double()), bm = std::fabs(b.to_double());
    double safe = std::max(bm - b.error_bound, 1e-300);
    r.error_bound = a.error_bound / safe + am * b.error_bound / (safe * safe) + ulp_scale(r.value);
    return r;
  }
  friend HpScalar operator-(const HpScalar& a) { return HpScalar(-a.value, a.error_bound); }
  friend HpScalar abs(const HpScalar& a) { return HpScalar(abs(a.value), a.error_bound); }

  HpScalar scaled_si(i64 k) const {
    HpScalar r(value * Real::from_si(k, value.precision()), 0.0);
    r.error_bound = error_bound * (std::fabs(static_cast<double>(k))) + ulp_scale(r.value);
    return r;
  }
};

// ---------------------------------------------------------------------------
// double-double: ~31 significant digits from pairs of doubles (error-free
// transforms; products via FMA). Used for long exponential-sum accumulations
// where per-term mpfr would dominate the runtime.
// ---------------------------------------------------------------------------
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD dd_two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD dd_add(DD a, DD b) {
  DD s = dd_two_sum(a.hi, b.hi);
  double lo = a.lo + b.lo + s.lo;
  double hi = s.hi + lo;
  return {hi, lo - (hi - s.hi)};
}

inline DD dd_add_d(DD a, double b) { return dd_add(a, DD{b, 0.0}); }

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

inline DD dd_mul(DD a, DD b) {
  double p = a.hi * b.hi;
  double err = std::fma(a.hi, b.hi, -p);
  err += a.hi * b.lo + a.lo * b.hi;
  double hi = p + err;
  return {hi, err - (hi - p)};
}

inline DD dd_mul_d(DD a, double b) { return dd_mul(a, DD{b, 0.0}); }

inline DD dd_sub(DD a, DD b) { return dd_add(a, dd_neg(b)); }

inline double dd_to_double(DD a) { return a.hi + a.lo; }

DD dd_from_real(const Real& x);

}  // namespace ctsum
