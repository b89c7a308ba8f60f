#include "ctsum/real.hpp"

#include <cstdio>
#include <cstdlib>

namespace ctsum {

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*R*g", digits, MPFR_RNDN, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real const_pi(int prec_bits) {
  Real r(prec_bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real const_euler(int prec_bits) {
  Real r(prec_bits);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

Real const_log_2pi(int prec_bits) {
  Real r(prec_bits + 8);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  mpfr_mul_ui(r.raw(), r.raw(), 2, MPFR_RNDN);
  mpfr_log(r.raw(), r.raw(), MPFR_RNDN);
  Real out(prec_bits);
  mpfr_set(out.raw(), r.raw(), MPFR_RNDN);
  return out;
}

Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real log(const Real& a) {
  Real r(a.precision());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real pow_si(const Real& a, i64 e) {
  Real r(a.precision());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

DD dd_from_real(const Real& x) {
  double hi = mpfr_get_d(x.raw(), MPFR_RNDN);
  Real rem(x.precision());
  mpfr_sub_d(rem.raw(), x.raw(), hi, MPFR_RNDN);
  double lo = mpfr_get_d(rem.raw(), MPFR_RNDN);
  return {hi, lo};
}

}  // namespace ctsum
