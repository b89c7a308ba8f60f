#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctsum {

using i64 = std::int64_t;
using i128 = __int128_t;

// Precondition violations on user-facing inputs (exit code 2 at the CLI).
class DomainError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Work-size limits exceeded (exit code 3 at the CLI).
class ResourceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

i64 gcd64(i64 a, i64 b);

// Coprime pair (num, den) with 0 < num < den.
struct ReducedFraction {
  i64 num = 1;
  i64 den = 2;

  // Validates coprimality and 0 < r < b; throws DomainError otherwise.
  static ReducedFraction make(i64 r, i64 b);

  // (b - r)/b, the reflection through 1/2.
  ReducedFraction mirrored() const { return ReducedFraction{den - num, den}; }

  double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const ReducedFraction&) const = default;
};

// Inverse of r mod b in two normalizations: canonical in [1, b-1],
// signed minimal-absolute in (-b/2, b/2] (tie at b/2 goes positive).
struct ModInverse {
  i64 canonical = 0;
  i64 signed_rep = 0;
};

ModInverse mod_inverse(i64 r, i64 b);

struct Convergent {
  i64 u = 0;  // numerator
  i64 v = 1;  // denominator
};

// Canonical expansion <0; a_1,...,a_s> of a fraction in (0,1), final
// coefficient >= 2 (automatic from the Euclidean algorithm), together with
// the convergents (u_i, v_i) for i = 0..s under the convention
// (u_0, v_0) = (0, 1).
struct ContinuedFraction {
  std::vector<i64> coeffs;       // a_1..a_s
  std::vector<Convergent> conv;  // size s+1, conv[0] = {0, 1}

  static ContinuedFraction expand(ReducedFraction f);

  int levels() const { return static_cast<int>(coeffs.size()); }

  // The level-l ratio v_{l-1}/v_l (coprime; equals <0; a_l,...,a_1>).
  // May be 1/1 at l = 1 when a_1 = 1.
  std::pair<i64, i64> level_ratio(int l) const;
};

i64 totient(i64 n);
i64 divisor_count(i64 n);

// d(1), ..., d(n) by a divisor sieve.
std::vector<i64> divisor_count_table(i64 n);

bool is_prime(i64 n);

// Primes in [lo, hi], ascending. Segmented; memory ~ sqrt(hi) + (hi - lo).
// lo > hi yields an empty list.
std::vector<i64> primes_in(i64 lo, i64 hi);

}  // namespace ctsum
