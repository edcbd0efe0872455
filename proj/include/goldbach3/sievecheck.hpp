#pragma once

// Exact Montgomery identity, Moebius inversion of progression counts, and an
// empirical ratio explorer for the large-sieve style bound
//   sum_{Q < q <= 2Q} q max_a |N(a,q)|^2
//     << (n^2 + Q^2) H^-1 (log Q) max|b|^2 + (n + Q^2) H (log Q) sum|b|^2.
// The implied constant is unknown, so only the ratio is reported.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <vector>

#include "goldbach3/arith.hpp"
#include "goldbach3/common.hpp"
#include "goldbach3/fft.hpp"
#include "goldbach3/io.hpp"

namespace goldbach3 {

// b_1, ..., b_n; stored 0-based, addressed 1-based.
struct WeightSequence {
  std::vector<cplx> b;

  std::uint64_t n() const { return b.size(); }
  cplx at(std::uint64_t m) const { return b[m - 1]; }
};

inline WeightSequence mangoldt_weights(std::uint64_t n,
                                       const MangoldtTable& table) {
  if (n > table.limit())
    throw out_of_range_error("mangoldt_weights: n beyond table limit");
  WeightSequence w;
  w.b.resize(n);
  for (std::uint64_t m = 1; m <= n; ++m) w.b[m - 1] = table.lambda(m);
  return w;
}

// N(a, q) = sum over m <= n, m = a mod q of b_m
inline cplx progression_sum(const WeightSequence& w, std::uint64_t a,
                            std::uint64_t q) {
  if (q < 1 || a >= q) throw validation_error("progression_sum: need 0 <= a < q");
  cplx sum{};
  for (std::uint64_t m = (a == 0) ? q : a; m <= w.n(); m += q) sum += w.at(m);
  return sum;
}

// f_h(q) = sum over d | q of mu(d) (q/d) N(h mod (q/d), q/d).
// Satisfies q N(h, q) = sum_{d | q} f_h(d); q-periodic in h, so arbitrary
// h >= 0 is accepted.
inline cplx f_coeff(std::uint64_t h, std::uint64_t q, const WeightSequence& w) {
  if (q < 1) throw validation_error("f_coeff: q must be >= 1");
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= q; ++d) {
    if (q % d != 0) continue;
    divisors.push_back(d);
    if (d != q / d) divisors.push_back(q / d);
  }
  cplx sum{};
  for (const std::uint64_t d : divisors) {
    const int mu = mu_of(d);
    if (mu == 0) continue;
    const std::uint64_t t = q / d;
    sum += static_cast<double>(mu) * static_cast<double>(t) *
           progression_sum(w, h % t, t);
  }
  return sum;
}

// T(alpha) = sum_{m <= n} b_m e(alpha m)
inline cplx weight_exp_sum(const WeightSequence& w, double alpha) {
  cplx sum{};
  for (std::uint64_t m = 1; m <= w.n(); ++m)
    sum += w.at(m) * unit_phase(alpha * static_cast<double>(m));
  return sum;
}

struct MontgomeryCheck {
  double lhs = 0.0;  // (1/d) sum_h |f_h(d)|^2
  double rhs = 0.0;  // sum over reduced a < d of |T(a/d)|^2
};

inline MontgomeryCheck montgomery_check(std::uint64_t d,
                                        const WeightSequence& w) {
  if (d < 1) throw validation_error("montgomery_check: d must be >= 1");
  MontgomeryCheck out;
  for (std::uint64_t h = 0; h < d; ++h) out.lhs += std::norm(f_coeff(h, d, w));
  out.lhs /= static_cast<double>(d);
  for (std::uint64_t a = 0; a < d; ++a) {
    if (std::gcd(a, d) != 1) continue;  // d = 1 keeps a = 0
    out.rhs += std::norm(
        weight_exp_sum(w, static_cast<double>(a) / static_cast<double>(d)));
  }
  return out;
}

struct SieveLemmaReport {
  double lhs = 0.0;
  double rhs_term1 = 0.0;
  double rhs_term2 = 0.0;
  double ratio = 0.0;
};

// q ~ Q means Q < q <= 2Q. log Q is clamped to >= 1 so the desk-scale ratio
// stays meaningful at Q = 1.
inline SieveLemmaReport sieve_lemma_ratio(std::uint64_t Q, double H,
                                          const WeightSequence& w) {
  if (Q < 1) throw validation_error("sieve_lemma_ratio: Q must be >= 1");
  if (!(H > 0.0)) throw validation_error("sieve_lemma_ratio: H must be > 0");
  SieveLemmaReport out;
  const std::uint64_t n = w.n();
  for (std::uint64_t q = Q + 1; q <= 2 * Q; ++q) {
    std::vector<cplx> buckets(q, cplx{});
    for (std::uint64_t m = 1; m <= n; ++m) buckets[m % q] += w.at(m);
    double best = 0.0;
    for (const cplx& v : buckets) best = std::max(best, std::norm(v));
    out.lhs += static_cast<double>(q) * best;
  }
  double max_b2 = 0.0, sum_b2 = 0.0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    const double nb = std::norm(w.at(m));
    max_b2 = std::max(max_b2, nb);
    sum_b2 += nb;
  }
  const double nd = static_cast<double>(n);
  const double Qd = static_cast<double>(Q);
  const double logQ = std::max(std::log(Qd), 1.0);
  out.rhs_term1 = (nd * nd + Qd * Qd) / H * logQ * max_b2;
  out.rhs_term2 = (nd + Qd * Qd) * H * logQ * sum_b2;
  const double rhs = out.rhs_term1 + out.rhs_term2;
  out.ratio = (out.lhs == 0.0 || rhs == 0.0) ? 0.0 : out.lhs / rhs;
  return out;
}

inline constexpr const char* kSieveCsvHeader = "n,Q,H,lhs,rhs1,rhs2,ratio,seed";

inline void write_sieve_row_csv(std::ostream& os, std::uint64_t n,
                                std::uint64_t Q, double H,
                                const SieveLemmaReport& r, std::uint64_t seed) {
  os << n << ',' << Q << ',' << format_double(H) << ','
     << format_double(r.lhs) << ',' << format_double(r.rhs_term1) << ','
     << format_double(r.rhs_term2) << ',' << format_double(r.ratio) << ','
     << seed << '\n';
}

}  // namespace goldbach3
