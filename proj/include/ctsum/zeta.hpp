#pragma once

#include <complex>
#include <vector>

#include "ctsum/arith.hpp"
#include "ctsum/real.hpp"

namespace ctsum {

// Critical-line zeta values. The workhorse route is Euler-Maclaurin with
// double-double phase reduction (t ln n carried to ~31 digits via a table of
// logarithms built once in mpfr); the alternating-series route with
// Cohen-Villegas-Zagier acceleration serves as an independent cross-check at
// moderate heights, where its coefficient growth is still representable.
class ZetaEvaluator {
 public:
  explicit ZetaEvaluator(double t_budget = 1e5);

  struct Value {
    std::complex<double> z;
    double error_bound = 0.0;
  };

  // zeta(1/2 + it); |t| beyond the construction budget is a resource error
  Value zeta_half(double t) const;

  // eta-series route, |t| <= 2000
  Value zeta_half_eta(double t) const;

  double t_budget() const { return t_budget_; }

 private:
  Value em_eval(double t) const;
  Value eta_eval(double t) const;
  std::pair<double, double> phase_cos_sin(double t, i64 n) const;  // cos/sin of t ln n mod 2pi

  double t_budget_;
  i64 n_max_ = 0;
  std::vector<DD> ln_;  // ln_[n] = ln n
};

}  // namespace ctsum
