#pragma once

#include "ctsum/arith.hpp"
#include "ctsum/cotangent.hpp"
#include "ctsum/zeta.hpp"

namespace ctsum {

// Left side of the weighted |zeta|^2 identity: after symmetrizing in t the
// integral reduces to (1/(pi sqrt(r b))) int_0^T |zeta(1/2+it)|^2
// cos(t log(b/r)) / (1/4 + t^2) dt plus a tail.
struct LhsResult {
  double value = 0.0;
  double tail_bound = 0.0;  // empirical |zeta|^2 growth estimate, doubled
  double quad_error = 0.0;
  i64 zeta_evals = 0;
  i64 panels = 0;
};

LhsResult identity_lhs(ReducedFraction f, double T, double step, const ZetaEvaluator& zv,
                       int workers);

// largest admissible panel width for the oscillation log(b/r)
double identity_max_step(ReducedFraction f);

// closed form: ((log 2pi - gamma)/2)(1/r + 1/b) + ((b-r)/(2rb)) log(r/b)
//              - (pi/(2rb)) (V(r/b) + V((b mod r)/r)); the second V term is
//              the residue-reduced reading of the argument b/r > 1 (empty
//              for r = 1).
HpScalar identity_rhs(ReducedFraction f, const CotangentEvaluator& ev);

struct IdentityReport {
  ReducedFraction f;
  double T = 0.0;
  double step = 0.0;
  double tol = 0.0;
  double lhs = 0.0;
  double tail_bound = 0.0;
  double quad_error = 0.0;
  HpScalar rhs;
  double gap = 0.0;
  bool pass = false;
  i64 zeta_evals = 0;
  double wall_ms = 0.0;
  int workers = 1;

  explicit IdentityReport(int prec_bits) : rhs(prec_bits) {}
};

IdentityReport verify_identity(ReducedFraction f, double T, double step, double tol,
                               const ZetaEvaluator& zv, const CotangentEvaluator& ev,
                               int workers);

}  // namespace ctsum
