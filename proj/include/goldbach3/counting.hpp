#pragma once

// Exact representation counts:
//   j3    Lambda-weighted count of m1+m2+m3 = n in the three progressions
//   r3big log p1 log p2 log p3 over prime-only triples
//   r3    unweighted ordered prime triple count
//   w1..w4 the prime-power defect split by which slots carry exponents >= 2:
//          (1) e1,e2 >= 2   (2) e1 = 1, e2 >= 2   (3) e1 >= 2, e2 = 1
//          (4) e1 = e2 = 1, e3 >= 2
// plus the J2 pair-count profile, a convolution-based J3 engine, the main
// term, and nested deviation scans over modulus ranges.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "goldbach3/arith.hpp"
#include "goldbach3/common.hpp"
#include "goldbach3/constraint.hpp"
#include "goldbach3/fft.hpp"
#include "goldbach3/io.hpp"
#include "goldbach3/singular.hpp"

namespace goldbach3 {

struct RepCounts {
  double j3 = 0.0;
  double r3big = 0.0;
  std::int64_t r3 = 0;
  std::int64_t w1 = 0, w2 = 0, w3 = 0, w4 = 0;

  std::int64_t w_total() const { return w1 + w2 + w3 + w4; }
};

namespace detail {

struct WeightedPrimePower {
  std::uint32_t m;
  std::uint8_t exp;
  double lg;
};

// Prime powers m <= n with m = a mod q, with Lambda weights, ascending.
inline std::vector<WeightedPrimePower> prime_powers_in_progression(
    std::uint64_t n, std::uint64_t q, std::uint64_t a,
    const MangoldtTable& table) {
  std::vector<WeightedPrimePower> out;
  for (std::uint64_t m = (a == 0) ? q : a; m <= n; m += q) {
    if (m < 2) continue;
    const int e = table.prime_power_exponent(m);
    if (e != 0)
      out.push_back({static_cast<std::uint32_t>(m),
                     static_cast<std::uint8_t>(e), table.lambda(m)});
  }
  return out;
}

}  // namespace detail

// Direct enumeration over prime powers in the first two progressions.
inline RepCounts count_direct(const Constraint& c, const MangoldtTable& table) {
  c.validate();
  if (static_cast<std::uint64_t>(c.n) > table.limit())
    throw out_of_range_error("count_direct: n beyond table limit");
  RepCounts rc;
  if (c.n < 6) return rc;
  const std::uint64_t n = static_cast<std::uint64_t>(c.n);
  const auto l1 = detail::prime_powers_in_progression(n, c.q[0], c.a[0], table);
  const auto l2 = detail::prime_powers_in_progression(n, c.q[1], c.a[1], table);
  const std::uint64_t q3 = c.q[2], a3 = c.a[2];
  for (const auto& x1 : l1) {
    const std::uint64_t rem = n - x1.m;
    if (rem < 4) break;  // l1 ascending; no room for m2 + m3 >= 4
    for (const auto& x2 : l2) {
      if (x2.m + 2ULL > rem) break;
      const std::uint64_t m3 = rem - x2.m;
      if (m3 % q3 != a3) continue;
      const int e3 = table.prime_power_exponent(m3);
      if (e3 == 0) continue;
      const double w = x1.lg * x2.lg * table.lambda(m3);
      rc.j3 += w;
      if (x1.exp == 1 && x2.exp == 1 && e3 == 1) {
        rc.r3big += w;
        rc.r3 += 1;
      } else if (x1.exp >= 2 && x2.exp >= 2) {
        rc.w1 += 1;
      } else if (x1.exp == 1 && x2.exp >= 2) {
        rc.w2 += 1;
      } else if (x1.exp >= 2 && x2.exp == 1) {
        rc.w3 += 1;
      } else {
        rc.w4 += 1;
      }
    }
  }
  return rc;
}

// Crossover for the convolution engine; above this the transform is used.
inline constexpr std::uint64_t kConvolutionCrossover = 1u << 14;

// J2(m) for m = 0..2n: full convolution of the Lambda-in-progression
// sequences of slots 2 and 3. The transform path is spot-checked against
// direct evaluation at 16 indices on every call.
inline std::vector<double> j2_profile(const Constraint& c,
                                      const MangoldtTable& table) {
  c.validate();
  if (static_cast<std::uint64_t>(c.n) > table.limit())
    throw out_of_range_error("j2_profile: n beyond table limit");
  const std::uint64_t n = static_cast<std::uint64_t>(c.n);
  const auto l2 = detail::prime_powers_in_progression(n, c.q[1], c.a[1], table);
  const auto l3 = detail::prime_powers_in_progression(n, c.q[2], c.a[2], table);
  std::vector<double> out(2 * n + 1, 0.0);
  if (n <= kConvolutionCrossover) {
    for (const auto& x2 : l2)
      for (const auto& x3 : l3) out[x2.m + x3.m] += x2.lg * x3.lg;
    return out;
  }
  std::vector<double> f2(n + 1, 0.0), f3(n + 1, 0.0);
  for (const auto& x : l2) f2[x.m] = x.lg;
  for (const auto& x : l3) f3[x.m] = x.lg;
  const std::vector<double> conv = convolve_real(f2, f3);
  std::copy(conv.begin(), conv.end(), out.begin());
  // spot check against the direct double loop
  Rng rng(hash_combine(hash_combine(hash_combine(n, c.q[1]), c.a[1]),
                       hash_combine(c.q[2], c.a[2])));
  for (int i = 0; i < 16; ++i) {
    const std::uint64_t m = rng.between(4, 2 * n);
    double direct = 0.0;
    for (const auto& x2 : l2) {
      if (x2.m + 2ULL > m) break;
      const std::uint64_t m3 = m - x2.m;
      if (m3 <= n && m3 % c.q[2] == c.a[2] && table.is_prime_power(m3))
        direct += x2.lg * table.lambda(m3);
    }
    if (!near(out[m], direct, 1e-9))
      throw error("j2_profile: transform drifted from direct evaluation at m=" +
                  std::to_string(m));
  }
  return out;
}

// J3 as sum over m1 of Lambda(m1) J2(n - m1); equals count_direct().j3.
inline double count_convolution(const Constraint& c, const MangoldtTable& table) {
  c.validate();
  if (static_cast<std::uint64_t>(c.n) > table.limit())
    throw out_of_range_error("count_convolution: n beyond table limit");
  if (c.n < 6) return 0.0;
  const std::uint64_t n = static_cast<std::uint64_t>(c.n);
  const std::vector<double> prof = j2_profile(c, table);
  const auto l1 = detail::prime_powers_in_progression(n, c.q[0], c.a[0], table);
  double sum = 0.0;
  for (const auto& x1 : l1)
    if (x1.m + 4ULL <= n) sum += x1.lg * prof[n - x1.m];
  return sum;
}

// n^2 s3 / (2 phi(q1) phi(q2) phi(q3))
inline double main_term(const Constraint& c, double s3) {
  if (s3 < 0.0) throw validation_error("main_term: s3 must be >= 0");
  const double n = static_cast<double>(c.n);
  double denom = 2.0;
  for (int j = 0; j < 3; ++j) denom *= static_cast<double>(phi_of(c.q[j]));
  return n * n * s3 / denom;
}

// ---------------------------------------------------------------------------
// Deviation scans
// ---------------------------------------------------------------------------

struct DeviationRow {
  Constraint c;
  RepCounts counts;
  double j3 = 0.0;
  double s3_lower = 0.0, s3_upper = 0.0, s3_mid = 0.0;
  double main = 0.0;
  double abs_dev = 0.0;
  double rel_dev = 0.0;  // abs_dev / max(main, 1)
  bool sampled = false;
};

struct DeviationScanConfig {
  std::int64_t n = 0;
  std::vector<std::uint64_t> q1s, q2s, q3s;
  std::uint64_t seed = 0;
  int threads = 0;                        // <= 0: hardware concurrency
  std::uint64_t exact_residue_limit = 64; // exact max over residues up to here
  int residue_samples = 32;               // sampled above
  std::uint64_t pmax = kDefaultPrimeBound;
};

struct DeviationScanResult {
  std::vector<DeviationRow> rows;  // sorted by rel_dev descending
  double aggregate = 0.0;          // nested sum-of-maxima statistic
  std::uint64_t sampled_cells = 0;
};

namespace detail {

// Reduced residues mod q: all of them up to the exact limit, a seeded
// sample above it.
inline std::vector<std::uint64_t> residue_candidates(
    std::uint64_t q, const DeviationScanConfig& cfg, int axis, bool* sampled) {
  std::vector<std::uint64_t> out;
  if (q == 1) {
    out.push_back(0);
    return out;
  }
  if (q <= cfg.exact_residue_limit) {
    for (std::uint64_t a = 0; a < q; ++a)
      if (std::gcd(a, q) == 1) out.push_back(a);
    return out;
  }
  if (sampled) *sampled = true;
  Rng rng(hash_combine(hash_combine(cfg.seed, static_cast<std::uint64_t>(axis)), q));
  std::vector<bool> seen(q, false);
  const std::uint64_t available = phi_of(q);
  int wanted = cfg.residue_samples;
  while (wanted > 0 && out.size() < available) {
    const std::uint64_t a = rng.below(q);
    if (seen[a] || std::gcd(a, q) != 1) continue;
    seen[a] = true;
    out.push_back(a);
    --wanted;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  unsigned t = threads > 0 ? static_cast<unsigned>(threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  t = std::min<std::size_t>(t, count);
  if (t <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (unsigned k = 0; k < t; ++k) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

// J3 via a precomputed J2 profile; cheap enough to scan residues with.
inline double j3_from_profile(std::uint64_t n, std::uint64_t q1,
                              std::uint64_t a1, const std::vector<double>& prof,
                              const MangoldtTable& table) {
  double sum = 0.0;
  for (std::uint64_t m = (a1 == 0) ? q1 : a1; m + 4 <= n; m += q1) {
    if (m < 2) continue;
    const double lg = table.lambda(m);
    if (lg > 0.0) sum += lg * prof[n - m];
  }
  return sum;
}

}  // namespace detail

// Nested deviation statistic over the configured ranges:
//   aggregate = sum over q3 of max over a3 of
//               sum over q2 of max over a2 of
//               sum over q1 of max over a1 of |J3 - main|.
// Rows are emitted for the winning residues: one row per (q3, q2, q1).
inline DeviationScanResult deviation_scan(const DeviationScanConfig& cfg,
                                          const MangoldtTable& table) {
  if (cfg.n < 1) throw validation_error("deviation_scan: n must be positive");
  if (static_cast<std::uint64_t>(cfg.n) > table.limit())
    throw out_of_range_error("deviation_scan: n beyond table limit");
  DeviationScanResult result;
  if (cfg.q1s.empty() || cfg.q2s.empty() || cfg.q3s.empty()) return result;
  const std::uint64_t n = static_cast<std::uint64_t>(cfg.n);

  struct Cell {
    std::uint64_t q3, a3, q2, a2;
    double inner = 0.0;
    bool sampled = false;
  };
  std::vector<Cell> cells;
  std::vector<std::size_t> a3_counts;  // per q3: number of a3 candidates
  for (const std::uint64_t q3 : cfg.q3s) {
    bool s3sampled = false;
    const auto a3s = detail::residue_candidates(q3, cfg, 3, &s3sampled);
    a3_counts.push_back(a3s.size());
    for (const std::uint64_t a3 : a3s) {
      for (const std::uint64_t q2 : cfg.q2s) {
        bool s2sampled = false;
        const auto a2s = detail::residue_candidates(q2, cfg, 2, &s2sampled);
        for (const std::uint64_t a2 : a2s) {
          Cell cell{q3, a3, q2, a2, 0.0, s3sampled || s2sampled};
          cells.push_back(cell);
        }
      }
    }
  }

  const auto eval_inner = [&](std::uint64_t q3, std::uint64_t a3,
                              std::uint64_t q2, std::uint64_t a2,
                              bool* sampled) {
    Constraint base = Constraint::make(cfg.n, 1, 0, q2, a2, q3, a3);
    const std::vector<double> prof = j2_profile(base, table);
    double inner = 0.0;
    for (const std::uint64_t q1 : cfg.q1s) {
      bool s1sampled = false;
      const auto a1s = detail::residue_candidates(q1, cfg, 1, &s1sampled);
      if (sampled && s1sampled) *sampled = true;
      double best = 0.0;
      for (const std::uint64_t a1 : a1s) {
        const Constraint c = Constraint::make(cfg.n, q1, a1, q2, a2, q3, a3);
        if (c.first_invalid_pair() != 0) continue;
        const double j3 = detail::j3_from_profile(n, q1, a1, prof, table);
        const SingularSeriesValue s3 = singular_series(c, cfg.pmax);
        const double main = main_term(c, s3.midpoint());
        best = std::max(best, std::abs(j3 - main));
      }
      inner += best;
    }
    return inner;
  };

  detail::parallel_for(cells.size(), cfg.threads, [&](std::size_t i) {
    Cell& cell = cells[i];
    bool sampled = cell.sampled;
    cell.inner = eval_inner(cell.q3, cell.a3, cell.q2, cell.a2, &sampled);
    cell.sampled = sampled;
  });
  for (const Cell& cell : cells)
    if (cell.sampled) ++result.sampled_cells;

  // Reduce: per (q3, a3, q2) take the max over a2; per (q3, a3) sum over q2;
  // per q3 take the max over a3 and add it to the aggregate.
  std::size_t pos = 0;
  struct Winner {
    std::uint64_t q3 = 0, a3 = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> q2a2;  // per q2
  };
  std::vector<Winner> winners;
  for (std::size_t iq3 = 0; iq3 < cfg.q3s.size(); ++iq3) {
    double best_a3_value = -1.0;
    Winner best_winner;
    for (std::size_t ia3 = 0; ia3 < a3_counts[iq3]; ++ia3) {
      Winner w;
      double value = 0.0;
      for (std::size_t iq2 = 0; iq2 < cfg.q2s.size(); ++iq2) {
        double best_a2 = -1.0;
        std::uint64_t best_a2_res = 0;
        const std::uint64_t q2 = cfg.q2s[iq2];
        bool dummy = false;
        const std::size_t n_a2 =
            detail::residue_candidates(q2, cfg, 2, &dummy).size();
        for (std::size_t ia2 = 0; ia2 < n_a2; ++ia2) {
          const Cell& cell = cells[pos + ia2];
          if (cell.inner > best_a2) {
            best_a2 = cell.inner;
            best_a2_res = cell.a2;
          }
        }
        w.q3 = cells[pos].q3;
        w.a3 = cells[pos].a3;
        w.q2a2.emplace_back(q2, best_a2_res);
        value += best_a2;
        pos += n_a2;
      }
      if (value > best_a3_value) {
        best_a3_value = value;
        best_winner = w;
      }
    }
    result.aggregate += std::max(0.0, best_a3_value);
    winners.push_back(best_winner);
  }

  // Row pass: full counts for the winning residue choices.
  for (const Winner& w : winners) {
    for (const auto& [q2, a2] : w.q2a2) {
      Constraint base = Constraint::make(cfg.n, 1, 0, q2, a2, w.q3, w.a3);
      const std::vector<double> prof = j2_profile(base, table);
      for (const std::uint64_t q1 : cfg.q1s) {
        bool sampled = false;
        const auto a1s = detail::residue_candidates(q1, cfg, 1, &sampled);
        double best = -1.0;
        std::uint64_t best_a1 = 0;
        for (const std::uint64_t a1 : a1s) {
          const Constraint c = Constraint::make(cfg.n, q1, a1, q2, a2, w.q3, w.a3);
          if (c.first_invalid_pair() != 0) continue;
          const double j3 = detail::j3_from_profile(n, q1, a1, prof, table);
          const SingularSeriesValue s3 = singular_series(c, cfg.pmax);
          const double dev = std::abs(j3 - main_term(c, s3.midpoint()));
          if (dev > best) {
            best = dev;
            best_a1 = a1;
          }
        }
        if (best < 0.0) continue;
        DeviationRow row;
        row.c = Constraint::make(cfg.n, q1, best_a1, q2, a2, w.q3, w.a3);
        row.counts = count_direct(row.c, table);
        row.j3 = row.counts.j3;
        const SingularSeriesValue s3 = singular_series(row.c, cfg.pmax);
        row.s3_lower = s3.lower;
        row.s3_upper = s3.upper;
        row.s3_mid = s3.midpoint();
        row.main = main_term(row.c, row.s3_mid);
        row.abs_dev = std::abs(row.j3 - row.main);
        row.rel_dev = row.abs_dev / std::max(row.main, 1.0);
        row.sampled = sampled;
        result.rows.push_back(row);
      }
    }
  }
  std::stable_sort(result.rows.begin(), result.rows.end(),
                   [](const DeviationRow& a, const DeviationRow& b) {
                     return a.rel_dev > b.rel_dev;
                   });
  return result;
}

// ---------------------------------------------------------------------------
// Emitters. CSV columns and JSON keys are identical by contract.
// ---------------------------------------------------------------------------

inline constexpr const char* kCountCsvHeader =
    "n,q1,a1,q2,a2,q3,a3,j3,r3big,r3,w1,w2,w3,w4,s3_lower,s3_upper,main,"
    "abs_dev,rel_dev";

inline void write_deviation_row_csv(std::ostream& os, const DeviationRow& r) {
  os << r.c.n << ',' << r.c.q[0] << ',' << r.c.a[0] << ',' << r.c.q[1] << ','
     << r.c.a[1] << ',' << r.c.q[2] << ',' << r.c.a[2] << ','
     << format_double(r.j3) << ',' << format_double(r.counts.r3big) << ','
     << r.counts.r3 << ',' << r.counts.w1 << ',' << r.counts.w2 << ','
     << r.counts.w3 << ',' << r.counts.w4 << ','
     << format_double(r.s3_lower) << ',' << format_double(r.s3_upper) << ','
     << format_double(r.main) << ',' << format_double(r.abs_dev) << ','
     << format_double(r.rel_dev) << '\n';
}

inline nlohmann::ordered_json deviation_row_json(const DeviationRow& r) {
  nlohmann::ordered_json j;
  j["n"] = r.c.n;
  j["q1"] = r.c.q[0];
  j["a1"] = r.c.a[0];
  j["q2"] = r.c.q[1];
  j["a2"] = r.c.a[1];
  j["q3"] = r.c.q[2];
  j["a3"] = r.c.a[2];
  j["j3"] = r.j3;
  j["r3big"] = r.counts.r3big;
  j["r3"] = r.counts.r3;
  j["w1"] = r.counts.w1;
  j["w2"] = r.counts.w2;
  j["w3"] = r.counts.w3;
  j["w4"] = r.counts.w4;
  j["s3_lower"] = r.s3_lower;
  j["s3_upper"] = r.s3_upper;
  j["main"] = r.main;
  j["abs_dev"] = r.abs_dev;
  j["rel_dev"] = r.rel_dev;
  return j;
}

}  // namespace goldbach3
