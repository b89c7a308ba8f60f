#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ctsum/real.hpp"

using namespace ctsum;

TEST_CASE("Real round trips and arithmetic") {
  int prec = digits_to_bits(30);
  Real a = Real::from_si(3, prec);
  Real b = Real::from_si(7, prec);
  Real q = a / b;
  CHECK(q.to_double() == doctest::Approx(3.0 / 7.0).epsilon(1e-15));
  CHECK((q * b).to_double() == doctest::Approx(3.0).epsilon(1e-15));

  std::string s = const_pi(prec).to_string(30);
  CHECK(s.substr(0, 12) == "3.1415926535");
}

TEST_CASE("HpScalar error bounds are superadditive") {
  int prec = digits_to_bits(30);
  HpScalar a(Real::from_double(1.5, prec), 1e-20);
  HpScalar b(Real::from_double(2.5, prec), 3e-20);

  HpScalar s = a + b;
  CHECK(s.error_bound >= 4e-20);
  CHECK(std::isfinite(s.error_bound));

  HpScalar p = a * b;
  CHECK(p.error_bound >= 1.5 * 3e-20 + 2.5 * 1e-20);

  HpScalar d = a / b;
  CHECK(d.error_bound > 0);
  CHECK(std::isfinite(d.error_bound));

  // exact integers carry zero error
  CHECK(HpScalar::exact_si(42, prec).error_bound == 0.0);
}

TEST_CASE("double-double kernels") {
  DD x = dd_two_sum(1.0, 1e-20);
  CHECK(x.hi == 1.0);
  CHECK(x.lo == 1e-20);

  // (1 + eps)^2 = 1 + 2 eps + eps^2 kept past double precision
  DD one_eps{1.0, 1e-18};
  DD sq = dd_mul(one_eps, one_eps);
  CHECK(sq.hi == 1.0);
  CHECK(sq.lo == doctest::Approx(2e-18).epsilon(1e-10));

  int prec = digits_to_bits(40);
  DD pi_dd = dd_from_real(const_pi(prec));
  CHECK(pi_dd.hi == doctest::Approx(3.141592653589793));
  CHECK(std::fabs(pi_dd.lo) < 1e-15);
  CHECK(pi_dd.lo != 0.0);
}
