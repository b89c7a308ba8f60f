#include "ctsum/expsums.hpp"

#include <algorithm>
#include <cmath>

#include "ctsum/parallel.hpp"

namespace ctsum {

namespace {

constexpr int kTablePrec = 120;

i64 phase_index(i64 m, i64 n, i64 r, i64 rbar, i64 b) {
  i128 ph = (static_cast<i128>(m) * r + static_cast<i128>(n) * rbar) % b;
  if (ph < 0) ph += b;
  return static_cast<i64>(ph);
}

}  // namespace

ModulusTables ModulusTables::build(i64 b) {
  if (b < 1) throw DomainError("ModulusTables: modulus must be >= 1");
  if (b > 50'000'000) {
    throw ResourceError("ModulusTables: modulus " + std::to_string(b) +
                        " exceeds the 5e7 table budget");
  }
  ModulusTables t;
  t.b = b;
  if (b == 1) return t;

  t.inv.assign(static_cast<size_t>(b), 0);
  if (is_prime(b)) {
    // batch recurrence valid for prime modulus
    t.inv[1] = 1;
    for (i64 i = 2; i < b; ++i)
      t.inv[static_cast<size_t>(i)] = ((b - (b / i) * t.inv[static_cast<size_t>(b % i)] % b) % b);
  } else {
    for (i64 r = 1; r < b; ++r)
      if (gcd64(r, b) == 1) t.inv[static_cast<size_t>(r)] = mod_inverse(r, b).canonical;
  }

  t.cos_t.resize(static_cast<size_t>(b));
  t.sin_t.resize(static_cast<size_t>(b));
  mpfr_t ang, tw, val;
  mpfr_init2(ang, kTablePrec);
  mpfr_init2(tw, kTablePrec);
  mpfr_init2(val, kTablePrec);
  mpfr_const_pi(tw, MPFR_RNDN);
  mpfr_mul_ui(tw, tw, 2, MPFR_RNDN);
  Real tmp(kTablePrec);
  for (i64 k = 0; k < b; ++k) {
    mpfr_mul_si(ang, tw, k, MPFR_RNDN);
    mpfr_div_si(ang, ang, b, MPFR_RNDN);
    mpfr_cos(val, ang, MPFR_RNDN);
    mpfr_set(tmp.raw(), val, MPFR_RNDN);
    t.cos_t[static_cast<size_t>(k)] = dd_from_real(tmp);
    mpfr_sin(val, ang, MPFR_RNDN);
    mpfr_set(tmp.raw(), val, MPFR_RNDN);
    t.sin_t[static_cast<size_t>(k)] = dd_from_real(tmp);
  }
  mpfr_clears(ang, tw, val, static_cast<mpfr_ptr>(nullptr));
  return t;
}

double ExpSum::abs() const { return std::hypot(dd_to_double(re), dd_to_double(im)); }

HpScalar ExpSum::real_part(int prec_bits) const {
  Real v = Real::from_double(re.hi, prec_bits);
  Real lo = Real::from_double(re.lo, prec_bits);
  v += lo;
  return HpScalar(std::move(v), error_bound + std::fabs(dd_to_double(im)));
}

ExpSum kloosterman(i64 m, i64 n, const ModulusTables& t) {
  ExpSum s;
  if (t.b == 1) {
    // empty modulus: the single residue class contributes e(0) = 1
    s.re = DD{1.0, 0.0};
    s.terms = 1;
    return s;
  }
  for (i64 r = 1; r < t.b; ++r) {
    i64 rbar = t.inv[static_cast<size_t>(r)];
    if (rbar == 0) continue;
    i64 k = phase_index(m, n, r, rbar, t.b);
    s.re = dd_add(s.re, t.cos_t[static_cast<size_t>(k)]);
    s.im = dd_add(s.im, t.sin_t[static_cast<size_t>(k)]);
    ++s.terms;
  }
  s.error_bound = 4e-31 * static_cast<double>(s.terms + 1);
  return s;
}

ExpSum kloosterman(i64 m, i64 n, i64 b) {
  auto t = ModulusTables::build(b);
  return kloosterman(m, n, t);
}

WeilCheck weil_check(i64 m, i64 n, const ModulusTables& t) {
  ExpSum k = kloosterman(m, n, t);
  WeilCheck w;
  w.lhs = k.abs();
  i64 g3 = gcd64(gcd64(m, n), t.b);
  w.weil_rhs = static_cast<double>(divisor_count(t.b)) *
               std::sqrt(static_cast<double>(g3)) * std::sqrt(static_cast<double>(t.b));
  w.weil_pass = w.lhs <= w.weil_rhs + k.error_bound + 1e-12;
  w.ramanujan_applicable = (m == 0 || n == 0);
  if (w.ramanujan_applicable) {
    i64 other = (m == 0) ? n : m;
    w.ramanujan_rhs = static_cast<double>(gcd64(other, t.b));
    w.ramanujan_pass = w.lhs <= w.ramanujan_rhs + k.error_bound + 1e-12;
  }
  w.pass = w.weil_pass && (!w.ramanujan_applicable || w.ramanujan_pass);
  return w;
}

WeilCheck weil_check(i64 m, i64 n, i64 b) {
  auto t = ModulusTables::build(b);
  return weil_check(m, n, t);
}

TrilinearSpec TrilinearSpec::unit(double M, double N, double T, int sign) {
  TrilinearSpec s;
  s.M = M;
  s.N = N;
  s.T = T;
  s.sign = sign;
  s.a.assign(static_cast<size_t>(std::max<i64>(0, s.m_hi() - s.m_lo() + 1)), 1.0);
  s.c.assign(static_cast<size_t>(std::max<i64>(0, s.n_hi() - s.n_lo() + 1)), 1.0);
  return s;
}

i64 TrilinearSpec::b_max(i64 m, i64 n) const {
  long double thr = sqrtl(static_cast<long double>(m) * static_cast<long double>(n) /
                          (static_cast<long double>(M) * static_cast<long double>(N))) *
                    static_cast<long double>(T);
  return static_cast<i64>(floorl(thr * (1.0L + 1e-12L) + 1e-9L));
}

namespace {

void validate_trilinear(const TrilinearSpec& spec) {
  if (!(spec.M > 0) || !(spec.N > 0) || !(spec.T > 0))
    throw DomainError("trilinear: M, N, T must be positive");
  if (spec.sign != 1 && spec.sign != -1) throw DomainError("trilinear: sign must be +-1");
  i64 mc = std::max<i64>(0, spec.m_hi() - spec.m_lo() + 1);
  i64 nc = std::max<i64>(0, spec.n_hi() - spec.n_lo() + 1);
  if (static_cast<i64>(spec.a.size()) != mc || static_cast<i64>(spec.c.size()) != nc)
    throw DomainError("trilinear: coefficient sequences misaligned with their ranges");
  i128 triples = 0;
  for (i64 m = spec.m_lo(); m <= spec.m_hi(); ++m)
    for (i64 n = spec.n_lo(); n <= spec.n_hi(); ++n) triples += spec.b_max(m, n);
  if (triples > spec.eval_budget) {
    throw ResourceError("trilinear: " + std::to_string(static_cast<long long>(triples)) +
                        " Kloosterman evaluations exceed the budget " +
                        std::to_string(spec.eval_budget));
  }
}

void finalize_trilinear(const TrilinearSpec& spec, TrilinearResult& r) {
  double a2 = 0.0, c2 = 0.0;
  for (double v : spec.a) a2 += v * v;
  for (double v : spec.c) c2 += v * v;
  r.a_norm2 = std::sqrt(a2);
  r.c_norm2 = std::sqrt(c2);
  r.value_abs = std::hypot(dd_to_double(r.re), dd_to_double(r.im));
  double mn = spec.M * spec.N;
  r.reference_scale =
      (std::sqrt(mn) + std::pow(spec.T * mn, 1.0 / 6.0)) * r.a_norm2 * r.c_norm2;
  r.di_ratio = (r.reference_scale > 0.0) ? r.value_abs / r.reference_scale : 0.0;
}

}  // namespace

TrilinearResult trilinear_di_sum(const TrilinearSpec& spec, int workers) {
  validate_trilinear(spec);
  TrilinearResult out;

  i64 b_cap = 0;
  for (i64 m = spec.m_lo(); m <= spec.m_hi(); ++m)
    for (i64 n = spec.n_lo(); n <= spec.n_hi(); ++n) b_cap = std::max(b_cap, spec.b_max(m, n));

  struct Partial {
    DD re{}, im{};
    i64 evals = 0;
  };
  constexpr i64 kChunk = 16;  // moduli per chunk
  i64 chunks = chunk_count(b_cap, kChunk);
  Partial total = parallel_chunks<Partial>(
      chunks, workers,
      [&](i64 chunk) {
        auto [blo, bhi] = chunk_bounds(chunk, kChunk, b_cap);
        Partial p;
        for (i64 b = blo + 1; b <= bhi; ++b) {
          auto tables = ModulusTables::build(b);
          for (i64 m = spec.m_lo(); m <= spec.m_hi(); ++m) {
            double am = spec.a[static_cast<size_t>(m - spec.m_lo())];
            for (i64 n = spec.n_lo(); n <= spec.n_hi(); ++n) {
              if (spec.b_max(m, n) < b) continue;
              double cn = spec.c[static_cast<size_t>(n - spec.n_lo())];
              ExpSum k = kloosterman(m, spec.sign * n, tables);
              ++p.evals;
              if (am == 0.0 || cn == 0.0) continue;
              double scale = am * cn / static_cast<double>(b);
              p.re = dd_add(p.re, dd_mul_d(k.re, scale));
              p.im = dd_add(p.im, dd_mul_d(k.im, scale));
            }
          }
        }
        return p;
      },
      Partial{},
      [](Partial acc, Partial p) {
        acc.re = dd_add(acc.re, p.re);
        acc.im = dd_add(acc.im, p.im);
        acc.evals += p.evals;
        return acc;
      });

  out.re = total.re;
  out.im = total.im;
  out.kloosterman_evals = total.evals;
  out.error_bound = 1e-30 * static_cast<double>(total.evals + 1);
  finalize_trilinear(spec, out);
  return out;
}

TrilinearResult trilinear_brute_force(const TrilinearSpec& spec) {
  validate_trilinear(spec);
  TrilinearResult out;

  i64 b_cap = 0;
  for (i64 m = spec.m_lo(); m <= spec.m_hi(); ++m)
    for (i64 n = spec.n_lo(); n <= spec.n_hi(); ++n) b_cap = std::max(b_cap, spec.b_max(m, n));
  std::vector<std::unique_ptr<ModulusTables>> tables(static_cast<size_t>(b_cap) + 1);

  // plain (m, n, b)-ordered triple sum, one Kloosterman sum at a time
  for (i64 m = spec.m_lo(); m <= spec.m_hi(); ++m) {
    double am = spec.a[static_cast<size_t>(m - spec.m_lo())];
    for (i64 n = spec.n_lo(); n <= spec.n_hi(); ++n) {
      double cn = spec.c[static_cast<size_t>(n - spec.n_lo())];
      i64 bm = spec.b_max(m, n);
      for (i64 b = 1; b <= bm; ++b) {
        if (!tables[static_cast<size_t>(b)])
          tables[static_cast<size_t>(b)] = std::make_unique<ModulusTables>(ModulusTables::build(b));
        ExpSum k = kloosterman(m, spec.sign * n, *tables[static_cast<size_t>(b)]);
        ++out.kloosterman_evals;
        double scale = am * cn / static_cast<double>(b);
        out.re = dd_add(out.re, dd_mul_d(k.re, scale));
        out.im = dd_add(out.im, dd_mul_d(k.im, scale));
      }
    }
  }
  out.error_bound = 1e-30 * static_cast<double>(out.kloosterman_evals + 1);
  finalize_trilinear(spec, out);
  return out;
}

double PrimeCharSum::abs() const { return std::hypot(dd_to_double(re), dd_to_double(im)); }

PrimeCharSum prime_char_sum(i64 m, i64 n, i64 q, i64 x) {
  if (!is_prime(q)) {
    throw DomainError("prime_char_sum: modulus " + std::to_string(q) + " is not prime");
  }
  if (x < 2) throw DomainError("prime_char_sum: x must be >= 2");
  auto tables = ModulusTables::build(q);
  auto primes = primes_in(2, x);

  PrimeCharSum s;
  for (i64 p : primes) {
    i64 pr = p % q;
    if (pr == 0) {
      ++s.skipped;  // m p + n/p undefined at p = 0 in the prime field
      continue;
    }
    i64 k = phase_index(m, n, pr, tables.inv[static_cast<size_t>(pr)], q);
    s.re = dd_add(s.re, tables.cos_t[static_cast<size_t>(k)]);
    s.im = dd_add(s.im, tables.sin_t[static_cast<size_t>(k)]);
    ++s.terms;
  }
  s.error_bound = 4e-31 * static_cast<double>(s.terms + 1);
  s.fm_ratio = s.abs() / std::pow(static_cast<double>(q), 31.0 / 32.0);
  return s;
}

}  // namespace ctsum
