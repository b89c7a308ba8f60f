#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ctsum/expsums.hpp"

using namespace ctsum;

TEST_CASE("kloosterman spot values") {
  // K(0,0,b) = phi(b)
  for (i64 b : {2, 5, 12, 100}) {
    auto k = kloosterman(0, 0, b);
    CHECK(dd_to_double(k.re) == doctest::Approx(static_cast<double>(totient(b))).epsilon(1e-14));
    CHECK(std::fabs(dd_to_double(k.im)) < 1e-25);
  }

  // brute force over residues 1..4 with inverses 1,3,2,4
  auto k115 = kloosterman(1, 1, 5);
  double expect = 2.0 + 2.0 * std::cos(4.0 * 3.14159265358979323846 / 5.0);
  CHECK(dd_to_double(k115.re) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(dd_to_double(k115.re) == doctest::Approx(0.381966).epsilon(1e-5));

  // Ramanujan sum: K(0,5,10) = -4 = mu(2) phi(10) / phi(2)
  auto k0510 = kloosterman(0, 5, 10);
  CHECK(dd_to_double(k0510.re) == doctest::Approx(-4.0).epsilon(1e-14));

  // empty-modulus convention
  auto k1 = kloosterman(3, 7, 1);
  CHECK(dd_to_double(k1.re) == 1.0);
}

TEST_CASE("kloosterman symmetry and realness") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    i64 b = 2 + static_cast<i64>(rng() % 150);
    i64 m = static_cast<i64>(rng() % 41) - 20;
    i64 n = static_cast<i64>(rng() % 41) - 20;
    auto t = ModulusTables::build(b);
    auto kmn = kloosterman(m, n, t);
    auto knm = kloosterman(n, m, t);
    CHECK(std::fabs(dd_to_double(kmn.re) - dd_to_double(knm.re)) < 1e-24);
    CHECK(std::fabs(dd_to_double(kmn.im)) <= kmn.error_bound);
  }
}

TEST_CASE("kloosterman twisted multiplicativity (abs form)") {
  std::mt19937_64 rng(7);
  int done = 0;
  while (done < 100) {
    i64 b1 = 2 + static_cast<i64>(rng() % 49);
    i64 b2 = 2 + static_cast<i64>(rng() % 49);
    if (gcd64(b1, b2) != 1) continue;
    i64 m = static_cast<i64>(rng() % 11) - 5;
    i64 n = static_cast<i64>(rng() % 11) - 5;
    i64 b2bar = mod_inverse(b2, b1).canonical;
    i64 b1bar = mod_inverse(b1, b2).canonical;
    double lhs = kloosterman(m, n, b1 * b2).abs();
    double rhs = kloosterman(m % b1 * (b2bar * b2bar % b1) % b1, n, b1).abs() *
                 kloosterman(m % b2 * (b1bar * b1bar % b2) % b2, n, b2).abs();
    CHECK(std::fabs(lhs - rhs) < 1e-10);
    ++done;
  }
}

TEST_CASE("weil and ramanujan bounds") {
  auto w115 = weil_check(1, 1, 5);
  CHECK(w115.lhs == doctest::Approx(0.381966).epsilon(1e-5));
  CHECK(w115.weil_rhs == doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-12));
  CHECK(w115.weil_pass);
  CHECK(!w115.ramanujan_applicable);

  auto w0510 = weil_check(0, 5, 10);
  CHECK(w0510.lhs == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(w0510.ramanujan_applicable);
  CHECK(w0510.ramanujan_rhs == 5.0);
  CHECK(w0510.ramanujan_pass);

  // (0,0,b): phi(b) <= d(b) * b
  for (i64 b : {6, 30, 210}) {
    auto w = weil_check(0, 0, b);
    CHECK(w.lhs == doctest::Approx(static_cast<double>(totient(b))).epsilon(1e-12));
    CHECK(w.weil_rhs == doctest::Approx(static_cast<double>(divisor_count(b) * b)).epsilon(1e-12));
    CHECK(w.pass);
  }
}

TEST_CASE("weil bound sweep b <= 60") {
  for (i64 b = 1; b <= 60; ++b) {
    auto t = ModulusTables::build(b);
    for (i64 m = -8; m <= 8; ++m)
      for (i64 n = -8; n <= 8; ++n) CHECK(weil_check(m, n, t).pass);
  }
}

TEST_CASE("trilinear conventions and oracle agreement") {
  // all-zero coefficients
  auto zero_spec = TrilinearSpec::unit(4, 4, 8, +1);
  std::fill(zero_spec.a.begin(), zero_spec.a.end(), 0.0);
  auto z = trilinear_di_sum(zero_spec);
  CHECK(dd_to_double(z.re) == 0.0);
  CHECK(dd_to_double(z.im) == 0.0);

  // single cell, T tuned so only b = 1 enters
  auto one = TrilinearSpec::unit(1, 1, 0.9, +1);
  REQUIRE(one.a.size() == 1);
  REQUIRE(one.b_max(2, 2) == 1);
  auto v1 = trilinear_di_sum(one);
  CHECK(dd_to_double(v1.re) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(v1.kloosterman_evals == 1);

  // factorized vs brute force, both signs
  for (int sign : {+1, -1}) {
    auto spec = TrilinearSpec::unit(8, 8, 32, sign);
    auto fast = trilinear_di_sum(spec, 2);
    auto slow = trilinear_brute_force(spec);
    CHECK(fast.kloosterman_evals == slow.kloosterman_evals);
    CHECK(std::fabs(dd_to_double(fast.re) - dd_to_double(slow.re)) < 1e-15);
    CHECK(std::fabs(dd_to_double(fast.im) - dd_to_double(slow.im)) < 1e-15);
    CHECK(fast.di_ratio == doctest::Approx(slow.di_ratio).epsilon(1e-10));
  }
}

TEST_CASE("trilinear budget enforcement") {
  auto spec = TrilinearSpec::unit(16, 16, 64, +1);
  spec.eval_budget = 10;
  CHECK_THROWS_AS(trilinear_di_sum(spec), ResourceError);
}

TEST_CASE("prime character sums") {
  CHECK_THROWS_AS(prime_char_sum(1, 1, 10, 100), DomainError);

  // m = n = 0: every kept prime contributes 1
  auto s00 = prime_char_sum(0, 0, 101, 1000);
  CHECK(dd_to_double(s00.re) ==
        doctest::Approx(static_cast<double>(primes_in(2, 1000).size() - 1)).epsilon(1e-12));
  CHECK(s00.skipped == 1);  // p = 101 itself

  // E(1, 0, q) = sum_{p <= q} e(p/q) against direct enumeration
  i64 q = 101;
  auto e10 = prime_char_sum(1, 0, q, q);
  double re = 0.0, im = 0.0;
  for (i64 p : primes_in(2, q)) {
    if (p % q == 0) continue;
    re += std::cos(2.0 * 3.14159265358979323846 * p / q);
    im += std::sin(2.0 * 3.14159265358979323846 * p / q);
  }
  CHECK(dd_to_double(e10.re) == doctest::Approx(re).epsilon(1e-10));
  CHECK(dd_to_double(e10.im) == doctest::Approx(im).epsilon(1e-10));

  // trivial bound and monitored ratio
  auto s = prime_char_sum(3, 5, 1009, 1009);
  CHECK(s.abs() <= static_cast<double>(primes_in(2, 1009).size()));
  CHECK(s.fm_ratio == doctest::Approx(s.abs() / std::pow(1009.0, 31.0 / 32.0)));
}
