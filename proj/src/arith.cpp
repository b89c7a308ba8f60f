#include "ctsum/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ctsum {

i64 gcd64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ReducedFraction ReducedFraction::make(i64 r, i64 b) {
  if (b < 2 || r < 1 || r >= b) {
    throw DomainError("fraction " + std::to_string(r) + "/" + std::to_string(b) +
                      " violates 0 < r < b, b >= 2");
  }
  if (gcd64(r, b) != 1) {
    throw DomainError("fraction " + std::to_string(r) + "/" + std::to_string(b) +
                      " is not reduced (gcd != 1)");
  }
  return ReducedFraction{r, b};
}

ModInverse mod_inverse(i64 r, i64 b) {
  if (b < 2) {
    throw DomainError("mod_inverse(" + std::to_string(r) + ", " + std::to_string(b) +
                      "): modulus must be >= 2");
  }
  i64 rm = r % b;
  if (rm < 0) rm += b;
  if (rm == 0 || gcd64(rm, b) != 1) {
    throw DomainError("mod_inverse(" + std::to_string(r) + ", " + std::to_string(b) +
                      "): arguments are not coprime");
  }
  // extended Euclid on (rm, b)
  i64 old_s = 1, s = 0;
  i64 old_r = rm, rr = b;
  while (rr != 0) {
    i64 q = old_r / rr;
    i64 t = old_r - q * rr;
    old_r = rr;
    rr = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  i64 canonical = old_s % b;
  if (canonical < 0) canonical += b;
  // signed representative in (-b/2, b/2]; 2*canonical == b maps to +b/2
  i64 signed_rep = (2 * canonical > b) ? canonical - b : canonical;
  return ModInverse{canonical, signed_rep};
}

ContinuedFraction ContinuedFraction::expand(ReducedFraction f) {
  ContinuedFraction out;
  i64 p = f.num, q = f.den;
  out.conv.push_back(Convergent{0, 1});
  i64 u_prev = 1, v_prev = 0;  // (u_{-1}, v_{-1})
  while (p != 0) {
    i64 a = q / p;
    i64 rem = q % p;
    out.coeffs.push_back(a);
    const Convergent& last = out.conv.back();
    Convergent next{a * last.u + u_prev, a * last.v + v_prev};
    u_prev = last.u;
    v_prev = last.v;
    out.conv.push_back(next);
    q = p;
    p = rem;
  }
  return out;
}

std::pair<i64, i64> ContinuedFraction::level_ratio(int l) const {
  i64 vp = conv[static_cast<size_t>(l) - 1].v;
  i64 vc = conv[static_cast<size_t>(l)].v;
  return {vp, vc};  // consecutive convergent denominators are coprime
}

i64 totient(i64 n) {
  if (n < 1) throw DomainError("totient: n must be >= 1");
  i64 result = n;
  i64 m = n;
  for (i64 p = 2; p * p <= m; p += (p == 2) ? 1 : 2) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

i64 divisor_count(i64 n) {
  if (n < 1) throw DomainError("divisor_count: n must be >= 1");
  i64 count = 1;
  i64 m = n;
  for (i64 p = 2; p * p <= m; p += (p == 2) ? 1 : 2) {
    if (m % p == 0) {
      i64 e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      count *= (e + 1);
    }
  }
  if (m > 1) count *= 2;
  return count;
}

std::vector<i64> divisor_count_table(i64 n) {
  std::vector<i64> d(static_cast<size_t>(n) + 1, 0);
  for (i64 i = 1; i <= n; ++i)
    for (i64 j = i; j <= n; j += i) d[static_cast<size_t>(j)]++;
  return d;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (i64 p = 3; p * p <= n; p += 2)
    if (n % p == 0) return false;
  return true;
}

namespace {

std::vector<i64> simple_sieve(i64 limit) {
  std::vector<char> mark(static_cast<size_t>(limit) + 1, 1);
  if (limit >= 0) mark[0] = 0;
  if (limit >= 1) mark[1] = 0;
  for (i64 i = 2; i * i <= limit; ++i)
    if (mark[static_cast<size_t>(i)])
      for (i64 j = i * i; j <= limit; j += i) mark[static_cast<size_t>(j)] = 0;
  std::vector<i64> primes;
  for (i64 i = 2; i <= limit; ++i)
    if (mark[static_cast<size_t>(i)]) primes.push_back(i);
  return primes;
}

}  // namespace

std::vector<i64> primes_in(i64 lo, i64 hi) {
  std::vector<i64> out;
  if (lo > hi) return out;
  if (hi < 2) return out;
  lo = std::max<i64>(lo, 2);
  i64 root = static_cast<i64>(std::sqrt(static_cast<double>(hi)));
  while (root * root > hi) --root;
  while ((root + 1) * (root + 1) <= hi) ++root;
  auto base = simple_sieve(root);

  constexpr i64 kSegment = 1 << 20;
  std::vector<char> seg;
  for (i64 start = lo; start <= hi; start += kSegment) {
    i64 end = std::min(hi, start + kSegment - 1);
    seg.assign(static_cast<size_t>(end - start + 1), 1);
    for (i64 p : base) {
      i64 first = std::max(p * p, ((start + p - 1) / p) * p);
      for (i64 j = first; j <= end; j += p) seg[static_cast<size_t>(j - start)] = 0;
    }
    // every composite v has a prime factor p <= sqrt(v), crossed from p*p on
    for (i64 v = start; v <= end; ++v)
      if (seg[static_cast<size_t>(v - start)]) out.push_back(v);
  }
  return out;
}

}  // namespace ctsum
