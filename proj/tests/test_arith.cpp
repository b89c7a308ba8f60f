#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ctsum/arith.hpp"

using namespace ctsum;

TEST_CASE("mod_inverse worked examples") {
  auto a = mod_inverse(3, 7);  // 3*5 = 15 = 2*7 + 1
  CHECK(a.canonical == 5);
  CHECK(a.signed_rep == -2);

  for (i64 b : {2, 3, 10, 101, 999}) {
    CHECK(mod_inverse(1, b).canonical == 1);
    CHECK(mod_inverse(1, b).signed_rep == 1);
  }

  // brute force over residues 1..8: 4*7 = 28 = 3*9 + 1
  auto c = mod_inverse(4, 9);
  CHECK(c.canonical == 7);
  CHECK(c.signed_rep == -2);
}

TEST_CASE("mod_inverse signed tie goes positive") {
  // b even with canonical exactly b/2: r = 3, b = 8 -> 3*3 = 9 = 1 mod 8, canonical 3;
  // construct a genuine tie: b = 2, r = 1 -> canonical 1 = b/2 -> signed +1
  CHECK(mod_inverse(1, 2).signed_rep == 1);
}

TEST_CASE("mod_inverse domain errors name the pair") {
  CHECK_THROWS_WITH_AS(mod_inverse(2, 4), doctest::Contains("(2, 4)"), DomainError);
  CHECK_THROWS_AS(mod_inverse(1, 1), DomainError);
  CHECK_THROWS_AS(mod_inverse(5, 0), DomainError);
}

TEST_CASE("mod_inverse involution over all b <= 1000") {
  for (i64 b = 2; b <= 1000; ++b) {
    for (i64 r = 1; r < b; ++r) {
      if (gcd64(r, b) != 1) continue;
      i64 inv = mod_inverse(r, b).canonical;
      CHECK(((static_cast<i128>(inv) * r) % b) == 1);
      CHECK(mod_inverse(inv, b).canonical == r);
    }
  }
}

TEST_CASE("continued fraction of 7/17") {
  auto cf = ContinuedFraction::expand(ReducedFraction::make(7, 17));
  REQUIRE(cf.coeffs == std::vector<i64>{2, 2, 3});
  REQUIRE(cf.conv.size() == 4);
  CHECK(cf.conv[0].u == 0);
  CHECK(cf.conv[0].v == 1);
  CHECK(cf.conv[1].u == 1);
  CHECK(cf.conv[1].v == 2);
  CHECK(cf.conv[2].u == 2);
  CHECK(cf.conv[2].v == 5);
  CHECK(cf.conv[3].u == 7);
  CHECK(cf.conv[3].v == 17);
}

TEST_CASE("continued fraction of unit fractions") {
  for (i64 v : {2, 5, 19, 1000}) {
    auto cf = ContinuedFraction::expand(ReducedFraction::make(1, v));
    CHECK(cf.coeffs == std::vector<i64>{v});
    CHECK(cf.conv.back().u == 1);
    CHECK(cf.conv.back().v == v);
  }
}

TEST_CASE("reversal spot value for 7/17") {
  // v1/v2 = 2/5 and <0; a2, a1> = <0; 2, 2> = 2/5
  auto cf = ContinuedFraction::expand(ReducedFraction::make(7, 17));
  auto [vp, vc] = cf.level_ratio(2);
  CHECK(vp == 2);
  CHECK(vc == 5);
}

namespace {
// value of <0; a_l, ..., a_1> as a fraction via the continuant recurrence
std::pair<i64, i64> reversed_prefix_value(const std::vector<i64>& coeffs, int l) {
  i64 u = 0, v = 1, up = 1, vp = 0;
  for (int i = l - 1; i >= 0; --i) {
    i64 a = coeffs[static_cast<size_t>(i)];
    i64 nu = a * u + up, nv = a * v + vp;
    up = u;
    vp = v;
    u = nu;
    v = nv;
  }
  return {u, v};
}
}  // namespace

TEST_CASE("CF invariants and reversal identity for all b <= 1000") {
  for (i64 b = 2; b <= 1000; ++b) {
    for (i64 r = 1; r < b; ++r) {
      if (gcd64(r, b) != 1) continue;
      auto cf = ContinuedFraction::expand(ReducedFraction::make(r, b));
      // canonical form, exact reproduction, coprime convergents, v increasing
      CHECK(cf.coeffs.back() >= (cf.levels() == 1 ? 2 : 2));
      CHECK(cf.conv.back().u == r);
      CHECK(cf.conv.back().v == b);
      for (int i = 1; i <= cf.levels(); ++i) {
        const auto& c = cf.conv[static_cast<size_t>(i)];
        const auto& p = cf.conv[static_cast<size_t>(i) - 1];
        CHECK(c.u == cf.coeffs[static_cast<size_t>(i) - 1] * p.u +
                         (i >= 2 ? cf.conv[static_cast<size_t>(i) - 2].u : 1));
        CHECK(gcd64(c.u, c.v) == 1);
        if (i >= 2) CHECK(c.v > p.v);
        // reversal: v_{i-1}/v_i equals <0; a_i, ..., a_1>
        auto [ru, rv] = reversed_prefix_value(cf.coeffs, i);
        CHECK(ru == p.v);
        CHECK(rv == c.v);
      }
    }
  }
}

TEST_CASE("totient examples and multiplicativity") {
  CHECK(totient(1) == 1);
  CHECK(totient(10) == 4);
  CHECK(is_prime(10007));
  CHECK(totient(10007) == 10006);

  std::mt19937_64 rng(12345);
  int done = 0;
  while (done < 1000) {
    i64 m = 1 + static_cast<i64>(rng() % 2000);
    i64 n = 1 + static_cast<i64>(rng() % 2000);
    if (gcd64(m, n) != 1) continue;
    CHECK(totient(m * n) == totient(m) * totient(n));
    ++done;
  }
}

TEST_CASE("divisor_count examples and brute force to 1e5") {
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(5040) == 60);  // 2^4 * 3^2 * 5 * 7 -> 5*3*2*2

  auto table = divisor_count_table(100000);
  for (i64 n = 1; n <= 100000; n += 97) {
    i64 brute = 0;
    for (i64 d = 1; d * d <= n; ++d) {
      if (n % d == 0) brute += (d * d == n) ? 1 : 2;
    }
    CHECK(divisor_count(n) == brute);
    CHECK(table[static_cast<size_t>(n)] == brute);
  }
}

TEST_CASE("primes_in examples") {
  CHECK(primes_in(2, 10) == std::vector<i64>{2, 3, 5, 7});
  CHECK(primes_in(90, 100) == std::vector<i64>{97});
  CHECK(primes_in(10, 9).empty());
  CHECK(primes_in(2, 10000).size() == 1229);
}

TEST_CASE("segmented sieve agrees across segment boundaries") {
  auto big = primes_in(1 << 20, (1 << 20) + 40000);
  for (i64 p : big) CHECK(is_prime(p));
  i64 count = 0;
  for (i64 v = 1 << 20; v <= (1 << 20) + 40000; ++v)
    if (is_prime(v)) ++count;
  CHECK(static_cast<i64>(big.size()) == count);
}

TEST_CASE("ReducedFraction validation") {
  CHECK_THROWS_AS(ReducedFraction::make(2, 4), DomainError);
  CHECK_THROWS_AS(ReducedFraction::make(3, 3), DomainError);
  CHECK_THROWS_AS(ReducedFraction::make(0, 5), DomainError);
  auto f = ReducedFraction::make(7, 17);
  CHECK(f.mirrored() == ReducedFraction::make(10, 17));
}
