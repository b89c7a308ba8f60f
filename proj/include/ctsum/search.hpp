#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctsum/arith.hpp"
#include "ctsum/cotangent.hpp"

namespace ctsum {

// integer candidates r with A0*b <= r <= (A0+width)*b, read literally
std::pair<i64, i64> window_bounds(double A0, double width, i64 b);

struct Witness {
  i64 num = 0;
  i64 den = 1;
  i64 inv_canonical = 0;
  i64 inv_signed = 0;

  double inv_frac() const {
    return std::abs(static_cast<double>(inv_signed)) / static_cast<double>(den);
  }
};

struct CountReport {
  std::string kind;  // "nq" | "nalpha"
  i64 q = 0;         // nq
  i64 B = 0;         // nalpha
  double A0 = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
  double omega = 0.0;
  i64 candidates = 0;
  i64 count = 0;
  std::vector<Witness> witnesses;  // sorted by inverse size, then fraction
};

// primes p in [A0 q, (A0+delta) q] with |signed inverse| <= omega * q
CountReport count_Nq(i64 q, double A0, double delta, double omega);

// coprime pairs (r, b), B < b <= 2B, alpha <= r/b <= alpha+delta,
// |signed inverse of r mod b| <= omega * b; no cotangent evaluation involved
CountReport count_Nalpha(double alpha, double delta, double omega, i64 B);

struct SearchReport {
  std::string kind;  // "m" | "mp" | "ms"
  i64 base = 0;      // b, q, or B
  double C = 0.0;
  double D = 0.0;
  double A0 = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
  double omega = 0.0;  // ms only
  bool in_regime = true;

  i64 candidates = 0;
  i64 witness_count = 0;  // ms two-phase
  bool exhaustive = false;

  bool found = false;
  Witness witness;           // argmax fraction
  HpScalar achieved;         // max |c0|
  std::optional<double> bound;  // (D/pi) base log(base) when D supplied
  double achieved_over_bound = 0.0;
  bool pass = false;

  // smallest-|inverse| witness and its |c0| (ms two-phase)
  std::optional<Witness> first_witness;
  double first_witness_value = 0.0;

  std::string note;
  double wall_ms = 0.0;
  int workers = 1;

  explicit SearchReport(int prec_bits) : achieved(prec_bits) {}
};

// max |c0(r/b)| over coprime r in the window [A0 b, (A0+b^{-C}) b]
SearchReport scan_M(i64 b, double C, double A0, std::optional<double> D,
                    const CotangentEvaluator& ev, int workers);

// same window, r restricted to primes; q prime
SearchReport scan_Mp(i64 q, double C, double A0, double D, const CotangentEvaluator& ev,
                     int workers);

// two-phase short-interval search over fractions r/b, B < b <= 2B:
// phase 1 collects witnesses by inverse size only, phase 2 evaluates |c0|
// at the witnesses (CF route, direct for small b). The exhaustive mode
// evaluates every pair with |alpha - r/b| <= delta, B <= b <= 2B.
SearchReport scan_Ms(double alpha, double C, double D, i64 B, CotangentEvaluator& ev,
                     int workers, bool exhaustive = false);

}  // namespace ctsum
