#include "ctsum/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ctsum/parallel.hpp"

namespace ctsum {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr i64 kScanChunk = 64;

double power_width(i64 base, double expo) {  // base^{-expo}
  return std::exp(-expo * std::log(static_cast<double>(base)));
}

Witness make_witness(i64 r, i64 b) {
  auto inv = mod_inverse(r, b);
  return Witness{r, b, inv.canonical, inv.signed_rep};
}

// |s1|/d1 < |s2|/d2 via exact cross multiplication
bool inv_frac_less(const Witness& a, const Witness& b) {
  i128 lhs = static_cast<i128>(std::abs(a.inv_signed)) * b.den;
  i128 rhs = static_cast<i128>(std::abs(b.inv_signed)) * a.den;
  if (lhs != rhs) return lhs < rhs;
  if (a.den != b.den) return a.den < b.den;
  return a.num < b.num;
}

struct Best {
  bool found = false;
  HpScalar value;  // |c0|
  i64 num = 0;
  i64 den = 1;

  explicit Best(int prec) : value(prec) {}
};

// larger |c0| wins; exact-value ties go to smaller numerator, then denominator
Best fold_best(Best acc, Best cand) {
  if (!cand.found) return acc;
  if (!acc.found) return cand;
  if (acc.value.value < cand.value.value) return cand;
  if (cand.value.value < acc.value.value) return acc;
  if (cand.num != acc.num) return (cand.num < acc.num) ? cand : acc;
  return (cand.den < acc.den) ? cand : acc;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

std::pair<i64, i64> window_bounds(double A0, double width, i64 b) {
  long double lo = static_cast<long double>(A0) * static_cast<long double>(b);
  long double hi = (static_cast<long double>(A0) + static_cast<long double>(width)) *
                   static_cast<long double>(b);
  return {static_cast<i64>(ceill(lo)), static_cast<i64>(floorl(hi))};
}

SearchReport scan_M(i64 b, double C, double A0, std::optional<double> D,
                    const CotangentEvaluator& ev, int workers) {
  if (b < 2) throw DomainError("scan_M: b must be >= 2");
  if (!(C > 0.0 && C < 0.5)) throw DomainError("scan_M: C must lie in (0, 1/2)");
  if (!(A0 > 0.0 && A0 < 1.0)) throw DomainError("scan_M: A0 must lie in (0, 1)");
  double delta = power_width(b, C);
  if (A0 + delta > 1.0 + 1e-12) {
    throw DomainError("scan_M: window [A0, A0 + b^-C] exceeds 1; shrink A0 or raise C");
  }

  Timer timer;
  SearchReport rep(ev.precision_bits());
  rep.kind = "m";
  rep.base = b;
  rep.C = C;
  rep.A0 = A0;
  rep.delta = delta;
  rep.workers = workers;
  if (D) {
    rep.D = *D;
    rep.bound = (*D / kPi) * static_cast<double>(b) * std::log(static_cast<double>(b));
    rep.in_regime = (*D > 0.0 && *D < 0.5 - C);
  }

  auto [rlo, rhi] = window_bounds(A0, delta, b);
  std::vector<i64> candidates;
  for (i64 r = std::max<i64>(1, rlo); r <= std::min(b - 1, rhi); ++r)
    if (gcd64(r, b) == 1) candidates.push_back(r);
  rep.candidates = static_cast<i64>(candidates.size());

  if (candidates.empty()) {
    rep.note = "empty candidate window";
    rep.pass = false;
    rep.wall_ms = timer.ms();
    return rep;
  }

  i64 n = static_cast<i64>(candidates.size());
  Best best = parallel_chunks<Best>(
      chunk_count(n, kScanChunk), workers,
      [&](i64 chunk) {
        auto [lo, hi] = chunk_bounds(chunk, kScanChunk, n);
        Best local(ev.precision_bits());
        for (i64 i = lo; i < hi; ++i) {
          i64 r = candidates[static_cast<size_t>(i)];
          HpScalar v = abs(ev.c0_direct(ReducedFraction{r, b}));
          Best cand(ev.precision_bits());
          cand.found = true;
          cand.value = std::move(v);
          cand.num = r;
          cand.den = b;
          local = fold_best(std::move(local), std::move(cand));
        }
        return local;
      },
      Best(ev.precision_bits()), fold_best);

  rep.found = best.found;
  rep.achieved = best.value;
  rep.witness = make_witness(best.num, best.den);
  if (rep.bound) {
    rep.achieved_over_bound = rep.achieved.to_double() / *rep.bound;
    rep.pass = rep.achieved.to_double() >= *rep.bound;
  } else {
    rep.pass = rep.found;
  }
  rep.wall_ms = timer.ms();
  return rep;
}

SearchReport scan_Mp(i64 q, double C, double A0, double D, const CotangentEvaluator& ev,
                     int workers) {
  if (!is_prime(q)) throw DomainError("scan_Mp: q = " + std::to_string(q) + " is not prime");
  if (!(C > 0.0) || !(D > 0.0)) throw DomainError("scan_Mp: C and D must be positive");
  if (!(A0 > 0.0 && A0 < 1.0)) throw DomainError("scan_Mp: A0 must lie in (0, 1)");
  double delta = power_width(q, C);
  if (A0 + delta > 1.0 + 1e-12) {
    throw DomainError("scan_Mp: window [A0, A0 + q^-C] exceeds 1; shrink A0 or raise C");
  }

  Timer timer;
  SearchReport rep(ev.precision_bits());
  rep.kind = "mp";
  rep.base = q;
  rep.C = C;
  rep.D = D;
  rep.A0 = A0;
  rep.delta = delta;
  rep.workers = workers;
  rep.in_regime = (C + D < 1.0 / 32.0);
  rep.bound = (D / kPi) * static_cast<double>(q) * std::log(static_cast<double>(q));

  auto [rlo, rhi] = window_bounds(A0, delta, q);
  auto primes = primes_in(std::max<i64>(2, rlo), std::min(q - 1, rhi));
  rep.candidates = static_cast<i64>(primes.size());

  if (primes.empty()) {
    rep.note = "no primes in the window";
    rep.pass = false;
    rep.wall_ms = timer.ms();
    return rep;
  }

  i64 n = static_cast<i64>(primes.size());
  Best best = parallel_chunks<Best>(
      chunk_count(n, kScanChunk), workers,
      [&](i64 chunk) {
        auto [lo, hi] = chunk_bounds(chunk, kScanChunk, n);
        Best local(ev.precision_bits());
        for (i64 i = lo; i < hi; ++i) {
          i64 p = primes[static_cast<size_t>(i)];
          Best cand(ev.precision_bits());
          cand.found = true;
          cand.value = abs(ev.c0_direct(ReducedFraction{p, q}));
          cand.num = p;
          cand.den = q;
          local = fold_best(std::move(local), std::move(cand));
        }
        return local;
      },
      Best(ev.precision_bits()), fold_best);

  rep.found = best.found;
  rep.achieved = best.value;
  rep.witness = make_witness(best.num, best.den);
  rep.achieved_over_bound = rep.achieved.to_double() / *rep.bound;
  rep.pass = rep.achieved.to_double() >= *rep.bound;
  rep.wall_ms = timer.ms();
  return rep;
}

CountReport count_Nq(i64 q, double A0, double delta, double omega) {
  if (!is_prime(q)) throw DomainError("count_Nq: q must be prime");
  if (!(delta > 0.0 && delta < 1.0) || !(omega > 0.0 && omega <= 1.0))
    throw DomainError("count_Nq: delta and omega must lie in (0, 1)");

  CountReport rep;
  rep.kind = "nq";
  rep.q = q;
  rep.A0 = A0;
  rep.delta = delta;
  rep.omega = omega;

  auto [rlo, rhi] = window_bounds(A0, delta, q);
  auto primes = primes_in(std::max<i64>(2, rlo), std::min(q - 1, rhi));
  rep.candidates = static_cast<i64>(primes.size());
  long double threshold = static_cast<long double>(omega) * static_cast<long double>(q);
  for (i64 p : primes) {
    Witness w = make_witness(p, q);
    if (static_cast<long double>(std::abs(w.inv_signed)) <= threshold) rep.witnesses.push_back(w);
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end(), [](const Witness& a, const Witness& b) {
    if (std::abs(a.inv_signed) != std::abs(b.inv_signed))
      return std::abs(a.inv_signed) < std::abs(b.inv_signed);
    return a.num < b.num;
  });
  rep.count = static_cast<i64>(rep.witnesses.size());
  return rep;
}

CountReport count_Nalpha(double alpha, double delta, double omega, i64 B) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("count_Nalpha: alpha must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0) || !(omega > 0.0 && omega <= 1.0))
    throw DomainError("count_Nalpha: delta and omega must lie in (0, 1)");
  if (B < 2) throw DomainError("count_Nalpha: B must be >= 2");

  CountReport rep;
  rep.kind = "nalpha";
  rep.B = B;
  rep.alpha = alpha;
  rep.delta = delta;
  rep.omega = omega;

  for (i64 b = B + 1; b <= 2 * B; ++b) {
    auto [rlo, rhi] = window_bounds(alpha, delta, b);
    long double threshold = static_cast<long double>(omega) * static_cast<long double>(b);
    for (i64 r = std::max<i64>(1, rlo); r <= std::min(b - 1, rhi); ++r) {
      if (gcd64(r, b) != 1) continue;
      rep.candidates++;
      Witness w = make_witness(r, b);
      if (static_cast<long double>(std::abs(w.inv_signed)) <= threshold) rep.witnesses.push_back(w);
    }
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end(), inv_frac_less);
  rep.count = static_cast<i64>(rep.witnesses.size());
  return rep;
}

SearchReport scan_Ms(double alpha, double C, double D, i64 B, CotangentEvaluator& ev, int workers,
                     bool exhaustive) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("scan_Ms: alpha must lie in (0, 1)");
  if (!(C > 0.0 && C < 1.0) || !(D > 0.0 && D < 1.0))
    throw DomainError("scan_Ms: C and D must lie in (0, 1)");
  if (B < 2) throw DomainError("scan_Ms: B must be >= 2");

  Timer timer;
  SearchReport rep(ev.precision_bits());
  rep.kind = "ms";
  rep.base = B;
  rep.C = C;
  rep.D = D;
  rep.alpha = alpha;
  rep.delta = power_width(B, C);
  rep.omega = power_width(B, D);
  rep.workers = workers;
  rep.exhaustive = exhaustive;
  rep.in_regime = (C + D < 0.75);
  rep.bound = (D / kPi) * static_cast<double>(B) * std::log(static_cast<double>(B));

  if (exhaustive) {
    // evaluate every reduced fraction with |alpha - r/b| <= delta, B <= b <= 2B
    std::vector<std::pair<i64, i64>> pairs;
    for (i64 b = B; b <= 2 * B; ++b) {
      auto [rlo, rhi] = window_bounds(alpha - rep.delta, 2 * rep.delta, b);
      for (i64 r = std::max<i64>(1, rlo); r <= std::min(b - 1, rhi); ++r)
        if (gcd64(r, b) == 1) pairs.emplace_back(r, b);
    }
    rep.candidates = static_cast<i64>(pairs.size());
    if (pairs.empty()) {
      rep.note = "empty window";
      rep.pass = false;
      rep.wall_ms = timer.ms();
      return rep;
    }
    i64 n = static_cast<i64>(pairs.size());
    Best best = parallel_chunks<Best>(
        chunk_count(n, kScanChunk), workers,
        [&](i64 chunk) {
          auto [lo, hi] = chunk_bounds(chunk, kScanChunk, n);
          Best local(ev.precision_bits());
          for (i64 i = lo; i < hi; ++i) {
            auto [r, b] = pairs[static_cast<size_t>(i)];
            Best cand(ev.precision_bits());
            cand.found = true;
            cand.value = abs(ev.c0_direct(ReducedFraction{r, b}));
            cand.num = r;
            cand.den = b;
            local = fold_best(std::move(local), std::move(cand));
          }
          return local;
        },
        Best(ev.precision_bits()), fold_best);
    rep.found = best.found;
    rep.achieved = best.value;
    rep.witness = make_witness(best.num, best.den);
    rep.achieved_over_bound = rep.achieved.to_double() / *rep.bound;
    rep.pass = rep.achieved.to_double() >= *rep.bound;
    rep.wall_ms = timer.ms();
    return rep;
  }

  // phase 1: inverse-size filter only (no cotangent work)
  CountReport counts = count_Nalpha(alpha, rep.delta, rep.omega, B);
  rep.candidates = counts.candidates;
  rep.witness_count = counts.count;
  if (counts.witnesses.empty()) {
    rep.note = "empty witness set; the positivity regime may not hold at this scale";
    rep.pass = false;
    rep.wall_ms = timer.ms();
    return rep;
  }
  rep.first_witness = counts.witnesses.front();

  // phase 2: |c0| only at witnesses; negative signed inverses evaluated at
  // the mirrored fraction (same |c0|, small positive inverse for the CF route)
  auto eval_abs_c0 = [&](const Witness& w) {
    i64 r_eval = (w.inv_signed >= 0) ? w.num : w.den - w.num;
    ReducedFraction f{r_eval, w.den};
    if (w.den < 64) return abs(ev.c0_direct(f));
    return abs(ev.c0_via_cf(f).first);
  };

  i64 n = counts.count;
  const auto& ws = counts.witnesses;
  Best best = parallel_chunks<Best>(
      chunk_count(n, kScanChunk), workers,
      [&](i64 chunk) {
        auto [lo, hi] = chunk_bounds(chunk, kScanChunk, n);
        Best local(ev.precision_bits());
        for (i64 i = lo; i < hi; ++i) {
          const Witness& w = ws[static_cast<size_t>(i)];
          Best cand(ev.precision_bits());
          cand.found = true;
          cand.value = eval_abs_c0(w);
          cand.num = w.num;
          cand.den = w.den;
          local = fold_best(std::move(local), std::move(cand));
        }
        return local;
      },
      Best(ev.precision_bits()), fold_best);

  rep.found = best.found;
  rep.achieved = best.value;
  rep.witness = make_witness(best.num, best.den);
  rep.first_witness_value = eval_abs_c0(*rep.first_witness).to_double();
  rep.achieved_over_bound = rep.achieved.to_double() / *rep.bound;
  rep.pass = rep.achieved.to_double() >= *rep.bound;
  rep.wall_ms = timer.ms();
  return rep;
}

}  // namespace ctsum
