#pragma once

// Exponential sums S_j(alpha), arc geometry on the unit circle, the exact
// DFT orthogonality identity for J3, grid-restricted major-arc integrals,
// and the truncated main term H(n).
//
// The fundamental domain is [-R/n, 1-R/n). The q = 1 neighborhood of 0 = 1
// is included as a wrap arc: without it the dominant contribution is lost.
// Arc membership uses circle distance, so wrap-around is handled uniformly.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "goldbach3/arith.hpp"
#include "goldbach3/common.hpp"
#include "goldbach3/constraint.hpp"
#include "goldbach3/counting.hpp"
#include "goldbach3/fft.hpp"
#include "goldbach3/ramanujan.hpp"

namespace goldbach3 {

// S_j(alpha) = sum over m <= n, m = a_j mod q_j of Lambda(m) e(alpha m).
// j is 1-based to match the slot naming.
inline cplx exp_sum(int j, double alpha, const Constraint& c,
                    const MangoldtTable& table) {
  c.validate();
  if (j < 1 || j > 3) throw validation_error("exp_sum: j must be 1, 2 or 3");
  if (static_cast<std::uint64_t>(c.n) > table.limit())
    throw out_of_range_error("exp_sum: n beyond table limit");
  const std::uint64_t q = c.q[j - 1], a = c.a[j - 1];
  const std::uint64_t n = static_cast<std::uint64_t>(c.n);
  cplx sum{};
  for (std::uint64_t m = (a == 0) ? q : a; m <= n; m += q) {
    if (m < 2) continue;
    const double lg = table.lambda(m);
    if (lg > 0.0) sum += lg * unit_phase(alpha * static_cast<double>(m));
  }
  return sum;
}

// M(alpha) = sum_{m=1}^{n} e(alpha m)
inline cplx m_sum(double alpha, std::int64_t n) {
  cplx sum{};
  for (std::int64_t m = 1; m <= n; ++m)
    sum += unit_phase(alpha * static_cast<double>(m));
  return sum;
}

struct ExpSumGrid {
  std::uint64_t N = 0;
  std::vector<cplx> s1, s2, s3, m;
};

// All four sums on the grid alpha = k/N via transforms of the folded
// coefficient sequences (e(mk/N) only depends on m mod N, so folding is
// exact for every N >= 1).
inline ExpSumGrid exp_sum_grid(const Constraint& c, std::uint64_t N,
                               const MangoldtTable& table) {
  c.validate();
  if (N < 1) throw validation_error("exp_sum_grid: N must be >= 1");
  if (static_cast<std::uint64_t>(c.n) > table.limit())
    throw out_of_range_error("exp_sum_grid: n beyond table limit");
  const std::uint64_t n = static_cast<std::uint64_t>(c.n);
  ExpSumGrid grid;
  grid.N = N;
  for (int j = 0; j < 3; ++j) {
    std::vector<cplx> x(N, cplx{});
    for (std::uint64_t m = (c.a[j] == 0) ? c.q[j] : c.a[j]; m <= n; m += c.q[j]) {
      if (m < 2) continue;
      const double lg = table.lambda(m);
      if (lg > 0.0) x[m % N] += lg;
    }
    auto out = dft_any(x, +1);
    (j == 0 ? grid.s1 : j == 1 ? grid.s2 : grid.s3) = std::move(out);
  }
  std::vector<cplx> ones(N, cplx{});
  for (std::uint64_t m = 1; m <= n; ++m) ones[m % N] += 1.0;
  grid.m = dft_any(ones, +1);
  return grid;
}

struct Arc {
  std::uint64_t a = 1, q = 1;
  double center = 0.0;
  double halfwidth = 0.0;
};

struct ArcSet {
  std::int64_t n = 0;
  double R = 1.0;
  std::vector<Arc> arcs;
  double domain_lo = 0.0, domain_hi = 1.0;

  // distance on the circle R/Z
  static double circle_distance(double x, double y) {
    double d = std::fmod(std::fabs(x - y), 1.0);
    return std::min(d, 1.0 - d);
  }

  bool contains(double alpha) const {
    for (const Arc& arc : arcs)
      if (circle_distance(alpha, arc.center) < arc.halfwidth) return true;
    return false;
  }
};

// Major arcs: for every q <= R and reduced 0 < a < q the interval
// a/q +- R/(qn), plus the wrap arc around 0 = 1 (a = q = 1).
inline ArcSet arcs_build(std::int64_t n, double R) {
  if (n < 1) throw validation_error("arcs_build: n must be positive");
  if (R < 1.0) throw validation_error("arcs_build: R must be >= 1");
  ArcSet set;
  set.n = n;
  set.R = R;
  set.domain_lo = -R / static_cast<double>(n);
  set.domain_hi = 1.0 - R / static_cast<double>(n);
  set.arcs.push_back({1, 1, 0.0, R / static_cast<double>(n)});
  const std::uint64_t qmax = static_cast<std::uint64_t>(std::floor(R));
  for (std::uint64_t q = 2; q <= qmax; ++q) {
    for (std::uint64_t a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      set.arcs.push_back({a, q,
                          static_cast<double>(a) / static_cast<double>(q),
                          R / (static_cast<double>(q) * static_cast<double>(n))});
    }
  }
  return set;
}

// (1/N) sum_k S1 S2 S3 (k/N) e(-nk/N). Exact orthogonality: with N >= 2n+1
// the only triple sum m1+m2+m3 in [6, 3n] congruent to n mod N is n itself.
inline cplx dft_identity_complex(const Constraint& c, std::uint64_t N,
                                 const MangoldtTable& table) {
  c.validate();
  if (N < 2 * static_cast<std::uint64_t>(c.n) + 1)
    throw validation_error(
        "dft_identity: N must be >= 2n+1 (smaller grids alias)");
  const ExpSumGrid grid = exp_sum_grid(c, N, table);
  const std::uint64_t n_mod = static_cast<std::uint64_t>(c.n) % N;
  cplx acc{};
  for (std::uint64_t k = 0; k < N; ++k) {
    const std::uint64_t r = mulmod(n_mod, k, N);
    acc += grid.s1[k] * grid.s2[k] * grid.s3[k] *
           unit_phase_ratio((N - r) % N, N);
  }
  return acc / static_cast<double>(N);
}

inline double dft_identity(const Constraint& c, std::uint64_t N,
                           const MangoldtTable& table) {
  const cplx v = dft_identity_complex(c, N, table);
  if (std::abs(v.imag()) > 1e-6 * std::max(1.0, std::abs(v.real())))
    throw error("dft_identity: imaginary residual exceeds tolerance");
  return v.real();
}

struct ArcSplit {
  double j3_total = 0.0;
  double j3_major = 0.0;
  double j3_minor = 0.0;
};

// Grid-restricted arc integrals at resolution 1/N; the minor part is the
// defining subtraction, so major + minor = total holds to machine precision.
inline ArcSplit major_arc_integral(const Constraint& c, double R,
                                   std::uint64_t N, const MangoldtTable& table) {
  c.validate();
  if (N < 2 * static_cast<std::uint64_t>(c.n) + 1)
    throw validation_error(
        "major_arc_integral: N must be >= 2n+1 (smaller grids alias)");
  const ArcSet arcs = arcs_build(c.n, R);
  const ExpSumGrid grid = exp_sum_grid(c, N, table);
  const std::uint64_t n_mod = static_cast<std::uint64_t>(c.n) % N;
  cplx total{}, major{};
  for (std::uint64_t k = 0; k < N; ++k) {
    const std::uint64_t r = mulmod(n_mod, k, N);
    const cplx term = grid.s1[k] * grid.s2[k] * grid.s3[k] *
                      unit_phase_ratio((N - r) % N, N);
    total += term;
    if (arcs.contains(static_cast<double>(k) / static_cast<double>(N)))
      major += term;
  }
  ArcSplit out;
  out.j3_total = total.real() / static_cast<double>(N);
  out.j3_major = major.real() / static_cast<double>(N);
  out.j3_minor = out.j3_total - out.j3_major;
  return out;
}

// H truncated at R: sum over q <= R of lambda(q) n^2 / (2 phi phi phi).
inline double truncated_H(const Constraint& c, double R) {
  c.validate();
  if (R < 1.0) throw validation_error("truncated_H: R must be >= 1");
  const double n = static_cast<double>(c.n);
  double denom = 2.0;
  for (int j = 0; j < 3; ++j) denom *= static_cast<double>(phi_of(c.q[j]));
  const double scale = n * n / denom;
  double sum = 0.0;
  const std::uint64_t qmax = static_cast<std::uint64_t>(std::floor(R));
  for (std::uint64_t q = 1; q <= qmax; ++q) sum += lambda_coeff(q, c) * scale;
  return sum;
}

inline constexpr const char* kArcsCsvHeader =
    "n,R,N,j3,j3_major,j3_minor,H_truncated,main_term";

}  // namespace goldbach3
