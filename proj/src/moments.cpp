#include "ctsum/moments.hpp"

#include <chrono>
#include <cmath>

#include "ctsum/parallel.hpp"
#include "ctsum/search.hpp"

namespace ctsum {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGolden = 0.61803398874989484820;  // (sqrt 5 - 1)/2

double hk_pass(int k, i64 nodes, i64 L, const CotangentEvaluator& ev, int workers) {
  constexpr i64 kChunk = 32;
  i64 chunks = chunk_count(nodes, kChunk);
  struct Partial {
    double sum = 0.0;
    double comp = 0.0;
  };
  Partial total = parallel_chunks<Partial>(
      chunks, workers,
      [&](i64 chunk) {
        auto [lo, hi] = chunk_bounds(chunk, kChunk, nodes);
        Partial p;
        for (i64 j = lo; j < hi; ++j) {
          double x = (static_cast<double>(j) + 0.5) / static_cast<double>(nodes) + kGolden;
          x -= std::floor(x);
          double g = ev.g_partial(x, L, /*reject_rational=*/false).to_double();
          double term = std::pow(g / kPi, 2.0 * k);
          double y = term - p.comp;
          double t = p.sum + y;
          p.comp = (t - p.sum) - y;
          p.sum = t;
        }
        return p;
      },
      Partial{},
      [](Partial acc, Partial p) {
        acc.sum += p.sum;
        return acc;
      });
  return total.sum / static_cast<double>(nodes);
}

}  // namespace

HkEstimate hk_quadrature(int k, i64 nodes, i64 L, const CotangentEvaluator& ev, int workers) {
  if (k < 1) throw DomainError("hk_quadrature: k must be >= 1");
  if (nodes < 100) throw DomainError("hk_quadrature: need at least 100 nodes");
  if (L < 1000) throw DomainError("hk_quadrature: need truncation L >= 1000");
  HkEstimate est;
  est.nodes = nodes;
  est.L = L;
  est.value = hk_pass(k, nodes, L, ev, workers);
  double coarse = hk_pass(k, nodes / 2, L / 2, ev, workers);
  est.refinement_delta = std::fabs(est.value - coarse);
  return est;
}

MomentReport empirical_moment(i64 b, int k, double A0, double A1, const CotangentEvaluator& ev,
                              int workers) {
  if (!(A0 > 0.0 && A0 < A1 && A1 < 1.0))
    throw DomainError("empirical_moment: need 0 < A0 < A1 < 1");
  if (k < 1) throw DomainError("empirical_moment: k must be >= 1");
  if (b < 2) throw DomainError("empirical_moment: b must be >= 2");

  auto start = std::chrono::steady_clock::now();
  MomentReport rep(ev.precision_bits());
  rep.b = b;
  rep.k = k;
  rep.A0 = A0;
  rep.A1 = A1;
  rep.workers = workers;

  auto [rlo, rhi] = window_bounds(A0, A1 - A0, b);
  std::vector<i64> rs;
  for (i64 r = std::max<i64>(1, rlo); r <= std::min(b - 1, rhi); ++r)
    if (gcd64(r, b) == 1) rs.push_back(r);
  rep.r_count = static_cast<i64>(rs.size());

  constexpr i64 kChunk = 16;
  i64 n = static_cast<i64>(rs.size());
  int prec = ev.precision_bits();
  HpScalar sum = parallel_chunks<HpScalar>(
      chunk_count(n, kChunk), workers,
      [&](i64 chunk) {
        auto [lo, hi] = chunk_bounds(chunk, kChunk, n);
        HpScalar local(prec);
        for (i64 i = lo; i < hi; ++i) {
          HpScalar c = ev.c0_direct(ReducedFraction{rs[static_cast<size_t>(i)], b});
          HpScalar power = c * c;
          for (int j = 1; j < k; ++j) power = power * (c * c);
          local = local + power;
        }
        return local;
      },
      HpScalar(prec), [](HpScalar acc, HpScalar p) { return acc + p; });

  rep.empirical = sum / HpScalar::exact_si(totient(b), prec);
  HpScalar bpow = HpScalar::exact_si(b, prec);
  HpScalar scale = bpow * bpow;
  for (int j = 1; j < k; ++j) scale = scale * (bpow * bpow);
  rep.normalized = rep.empirical / scale;
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

MomentReport moment_compare(i64 b, int k, double A0, double A1, i64 nodes, i64 L,
                            const CotangentEvaluator& ev, int workers) {
  MomentReport rep = empirical_moment(b, k, A0, A1, ev, workers);
  auto start = std::chrono::steady_clock::now();
  HkEstimate est = hk_quadrature(k, nodes, L, ev, workers);
  rep.nodes = est.nodes;
  rep.L = est.L;
  rep.quad_hk = est.value;
  rep.quad_refinement = est.refinement_delta;
  rep.window_scaled_hk = (A1 - A0) * est.value;
  double norm = rep.normalized.to_double();
  rep.relative_gap_printed = std::fabs(norm - rep.quad_hk) / rep.quad_hk;
  rep.relative_gap = std::fabs(norm - rep.window_scaled_hk) / rep.window_scaled_hk;
  rep.wall_ms +=
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace ctsum
