#pragma once

#include <cmath>
#include <memory>
#include <vector>

#include "ctsum/arith.hpp"
#include "ctsum/real.hpp"

namespace ctsum {

// Per-modulus support for complete exponential sums: unit inverse table and
// double-double tables of e(k/b). Build once per modulus, share across a
// grid of (m, n) arguments.
struct ModulusTables {
  i64 b = 1;
  std::vector<i64> inv;   // inv[r] = r^{-1} mod b for units, 0 otherwise
  std::vector<DD> cos_t;  // cos(2 pi k / b)
  std::vector<DD> sin_t;

  static ModulusTables build(i64 b);
};

// Complex sum accumulated in double-double; imaginary residue is reported so
// callers that expect a real value can fold it into the error estimate.
struct ExpSum {
  DD re{};
  DD im{};
  double error_bound = 0.0;
  i64 terms = 0;

  double abs() const;
  // real-folded view: value = Re, error grows by |Im|
  HpScalar real_part(int prec_bits) const;
};

// K(m, n, b) = sum over reduced residues r of e((m r + n rbar)/b); K(.,.,1) = 1.
ExpSum kloosterman(i64 m, i64 n, i64 b);
ExpSum kloosterman(i64 m, i64 n, const ModulusTables& tables);

struct WeilCheck {
  double lhs = 0.0;        // |K(m,n,b)|
  double weil_rhs = 0.0;   // d(b) (m,n,b)^{1/2} b^{1/2}
  bool weil_pass = false;
  bool ramanujan_applicable = false;  // m = 0 or n = 0
  double ramanujan_rhs = 0.0;         // (n,b) resp. (m,b)
  bool ramanujan_pass = false;
  bool pass = false;  // every applicable bound holds
};

WeilCheck weil_check(i64 m, i64 n, i64 b);
WeilCheck weil_check(i64 m, i64 n, const ModulusTables& tables);

// sum_{M<m<=2M} a_m sum_{N<n<=2N} b_n sum_{b <= (mn/MN)^{1/2} T} K(m, +-n, b)/b
struct TrilinearSpec {
  double M = 1.0;
  double N = 1.0;
  double T = 1.0;
  int sign = +1;
  std::vector<double> a;  // a_m for m = m_lo()..m_hi()
  std::vector<double> c;  // b_n for n = n_lo()..n_hi()
  i64 eval_budget = 200'000'000;  // (m, n, b) triples

  i64 m_lo() const { return static_cast<i64>(std::floor(M)) + 1; }
  i64 m_hi() const { return static_cast<i64>(std::floor(2 * M)); }
  i64 n_lo() const { return static_cast<i64>(std::floor(N)) + 1; }
  i64 n_hi() const { return static_cast<i64>(std::floor(2 * N)); }
  i64 b_max(i64 m, i64 n) const;  // largest modulus admitted for (m, n)

  static TrilinearSpec unit(double M, double N, double T, int sign);
};

struct TrilinearResult {
  DD re{};
  DD im{};
  double error_bound = 0.0;
  double value_abs = 0.0;
  double a_norm2 = 0.0;
  double c_norm2 = 0.0;
  double reference_scale = 0.0;  // ((MN)^{1/2} + (TMN)^{1/6}) ||a|| ||c||
  double di_ratio = 0.0;         // |value| / reference_scale (monitoring only)
  i64 kloosterman_evals = 0;
};

// modulus-major evaluation with shared per-b tables
TrilinearResult trilinear_di_sum(const TrilinearSpec& spec, int workers = 1);
// independent (m, n, b)-ordered brute force for cross-validation
TrilinearResult trilinear_brute_force(const TrilinearSpec& spec);

// sum over primes p <= x of e((m p + n pbar)/q), q prime; p = 0 mod q skipped.
struct PrimeCharSum {
  DD re{};
  DD im{};
  double error_bound = 0.0;
  i64 terms = 0;
  i64 skipped = 0;
  double fm_ratio = 0.0;  // |S| / q^{31/32} (monitoring only)

  double abs() const;
};

PrimeCharSum prime_char_sum(i64 m, i64 n, i64 q, i64 x);

}  // namespace ctsum
