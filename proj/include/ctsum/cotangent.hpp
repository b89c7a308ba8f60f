#pragma once

#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ctsum/arith.hpp"
#include "ctsum/real.hpp"

namespace ctsum {

enum class Smoothing { kNone, kCesaro };

// One level of the continued-fraction form of the sine-twisted divisor
// series: term_l = (1/v_l)(1/(pi v_l) + psi(v_{l-1}/v_l)), signed (-1)^l.
struct TermLevel {
  int level = 0;
  i64 v_prev = 1;
  i64 v_cur = 1;
  HpScalar psi;
  HpScalar term;
  double psi_over_v = 0.0;  // (1/v_l) * psi(v_{l-1}/v_l), the tail-size diagnostic
};

struct TermSpectrum {
  ReducedFraction source;  // fraction whose expansion produced the levels
  std::vector<TermLevel> levels;
  double eps = 0.0;
  double loglog_threshold = 0.0;
  double epslog_threshold = 0.0;
  int n_loglog = 0;  // levels with psi_over_v >= log log b
  int n_epslog = 0;  // levels with psi_over_v >= eps log b

  // -scale * sum_l (-1)^l term_l, folded in level order. c0_via_cf returns
  // exactly this, so recomputing it reproduces the value bit for bit.
  HpScalar reconstruct(i64 scale, int prec_bits) const;
};

// Evaluator for c0, the Vasyunin sum, the sine-twisted divisor series, g,
// and the continued-fraction remainder function psi. Pure value semantics
// except for the shared psi memo table (concurrent lookup, exclusive
// insertion; cached values are deterministic, so insertion races are benign).
class CotangentEvaluator {
 public:
  explicit CotangentEvaluator(int prec_bits, i64 psi_denominator_budget = 10'000'000);

  int precision_bits() const { return prec_; }

  // -sum_{m=1}^{b-1} (m/b) cot(pi m r / b), terms paired (m, b-m).
  HpScalar c0_direct(ReducedFraction f) const;

  // sum_{m=1}^{b-1} {m r / b} cot(pi m / b), same pairing.
  HpScalar vasyunin(ReducedFraction f) const;

  // Partial sum of sum_n d(n) sin(2 pi n x)/n, optionally Cesaro-averaged
  // over the last half of the range.
  HpScalar dsin1_partial(ReducedFraction x, i64 n_terms, Smoothing smoothing) const;

  // Partial sum of sum_{l<=L} (1 - 2{lx})/l. Rejects x that is numerically
  // a rational with small denominator (the full series diverges there);
  // quadrature callers whose nodes are known-safe may disable the guard.
  HpScalar g_partial(double x, i64 n_terms, bool reject_rational = true) const;

  // psi(p/q) for 0 < p <= q, gcd(p,q) = 1. q = 1 gives the unit-endpoint
  // value -1/pi. Derived recursively: reverse the expansion of p/q, evaluate
  // the divisor-series identity at the reversed fraction by a direct c0 sum,
  // and solve for the top-level psi term; shorter suffix ratios come from
  // the memo table.
  HpScalar psi(i64 p, i64 q);

  // Independent route for psi via a one-coefficient-longer parent expansion
  // (diagnostic for well-definedness).
  HpScalar psi_via_extended_parent(i64 p, i64 q, i64 extra_coeff);

  // c0 through the continued fraction of rbar/b, with the per-level spectrum.
  std::pair<HpScalar, TermSpectrum> c0_via_cf(ReducedFraction f);

  // Spectrum of f's own expansion with the two tail-size counts.
  TermSpectrum term_spectrum(ReducedFraction f, double eps);

  // term_spectrum restricted to b >= min_b (threshold below which the count
  // statements have no content).
  TermSpectrum lemma_diagnostics(ReducedFraction f, double eps, i64 min_b = 1000);

  i64 psi_cache_size() const;

 private:
  HpScalar c0_at(i64 r, i64 b) const;  // b = 1 allowed (empty sum)
  HpScalar paired_cot_sum(i64 b, i64 mmax, bool weights_from_angle, i64 r) const;
  TermSpectrum build_spectrum(ReducedFraction source, double eps);

  int prec_;
  i64 psi_budget_;
  Real pi_;
  mutable std::shared_mutex psi_mutex_;
  std::unordered_map<std::uint64_t, HpScalar> psi_cache_;
};

}  // namespace ctsum
