#pragma once

#include "ctsum/arith.hpp"
#include "ctsum/cotangent.hpp"

namespace ctsum {

struct HkEstimate {
  double value = 0.0;
  i64 nodes = 0;
  i64 L = 0;
  double refinement_delta = 0.0;  // |value - half-resolution value|
};

// midpoint-rule estimate of int_0^1 (g(x)/pi)^{2k} dx; the node grid is
// shifted by the golden ratio so every node stays clear of low-denominator
// rationals, where the g series misbehaves.
HkEstimate hk_quadrature(int k, i64 nodes, i64 L, const CotangentEvaluator& ev, int workers);

struct MomentReport {
  i64 b = 0;
  int k = 1;
  double A0 = 0.0;
  double A1 = 0.0;
  i64 r_count = 0;

  HpScalar empirical;   // (1/phi(b)) sum over the window of c0^{2k}
  HpScalar normalized;  // empirical / b^{2k}

  i64 nodes = 0;
  i64 L = 0;
  double quad_hk = 0.0;
  double quad_refinement = 0.0;
  double window_scaled_hk = 0.0;  // (A1 - A0) * quad_hk

  // gap against the as-printed reference and against the window-scaled one;
  // both are always reported (the two readings differ, see relative gaps)
  double relative_gap_printed = 0.0;
  double relative_gap = 0.0;

  double wall_ms = 0.0;
  int workers = 1;

  explicit MomentReport(int prec_bits) : empirical(prec_bits), normalized(prec_bits) {}
};

// empirical side only (quadrature fields left zero)
MomentReport empirical_moment(i64 b, int k, double A0, double A1, const CotangentEvaluator& ev,
                              int workers);

// both sides plus the gaps
MomentReport moment_compare(i64 b, int k, double A0, double A1, i64 nodes, i64 L,
                            const CotangentEvaluator& ev, int workers);

}  // namespace ctsum
