#pragma once

// Chebyshev-type sums over arithmetic progressions and the discrepancy
//   Delta(x, h) = sup over real y <= x, max over l coprime to h of
//                 | sum_{m <= y, m = l mod h} Lambda(m) - y / phi(h) |.
//
// The supremum is evaluated exactly: between jumps of the step function the
// integrand |psi(y) - y/phi(h)| is V-shaped in y, so only jump points, their
// left limits, and y = x can realize it.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <vector>

#include "goldbach3/arith.hpp"
#include "goldbach3/common.hpp"
#include "goldbach3/io.hpp"

namespace goldbach3 {

struct DiscrepancyRecord {
  double x = 0.0;
  std::uint64_t h = 1;
  double value = 0.0;
  double argmax_y = 0.0;
  std::uint64_t argmax_l = 0;
  bool from_left = false;  // max attained as y -> argmax_y from below
};

// psi(y; h, l) = sum of Lambda(m) over m <= y, m = l mod h.
inline double psi(double y, std::uint64_t h, std::uint64_t l,
                  const MangoldtTable& table) {
  if (h < 1 || l >= h) throw validation_error("psi: need 0 <= l < h");
  if (y > static_cast<double>(table.limit()))
    throw out_of_range_error("psi: y beyond table limit");
  if (y < 2.0) return 0.0;
  const std::uint64_t yi = static_cast<std::uint64_t>(std::floor(y));
  double sum = 0.0;
  std::uint64_t m = (l == 0) ? h : l;
  for (; m <= yi; m += h) sum += table.lambda(m);
  return sum;
}

inline DiscrepancyRecord discrepancy(double x, std::uint64_t h,
                                     const MangoldtTable& table) {
  if (h < 1 || x < 1.0) throw validation_error("discrepancy: need h >= 1, x >= 1");
  if (x > static_cast<double>(table.limit()))
    throw out_of_range_error("discrepancy: x beyond table limit");
  const std::uint64_t xi = static_cast<std::uint64_t>(std::floor(x));
  const double inv_phi = 1.0 / static_cast<double>(phi_of(h));
  DiscrepancyRecord best;
  best.x = x;
  best.h = h;
  best.value = -1.0;
  const auto consider = [&](double v, double y, std::uint64_t l, bool left) {
    if (v > best.value) {
      best.value = v;
      best.argmax_y = y;
      best.argmax_l = l;
      best.from_left = left;
    }
  };
  for (std::uint64_t l = 0; l < h; ++l) {
    if (std::gcd(l, h) != 1) continue;
    double running = 0.0;
    for (std::uint64_t m = (l == 0) ? h : l; m <= xi; m += h) {
      const double lg = table.lambda(m);
      if (lg <= 0.0) continue;
      const double ym = static_cast<double>(m);
      consider(std::abs(running - ym * inv_phi), ym, l, true);
      running += lg;
      consider(std::abs(running - ym * inv_phi), ym, l, false);
    }
    consider(std::abs(running - x * inv_phi), x, l, false);
  }
  return best;
}

struct BvSum {
  double sum = 0.0;
  std::vector<DiscrepancyRecord> rows;
  // Report-only comparison quantities (implied constants unknown):
  double bv_main = 0.0;       // x / (log x)^D
  double bv_secondary = 0.0;  // U sqrt(x) (log(Ux))^6
};

inline BvSum bv_sum(double x, std::uint64_t U, const MangoldtTable& table,
                    double D = 2.0) {
  if (x > static_cast<double>(table.limit()))
    throw out_of_range_error("bv_sum: x beyond table limit");
  BvSum out;
  for (std::uint64_t h = 1; h <= U; ++h) {
    out.rows.push_back(discrepancy(x, h, table));
    out.sum += out.rows.back().value;
  }
  out.bv_main = x / std::pow(std::log(x), D);
  out.bv_secondary = static_cast<double>(U) * std::sqrt(x) *
                     std::pow(std::log(static_cast<double>(U) * x), 6.0);
  return out;
}

inline void write_discrepancy_csv(std::ostream& os,
                                  const std::vector<DiscrepancyRecord>& rows) {
  os << "x,h,delta,argmax_y,argmax_l\n";
  for (const auto& r : rows) {
    os << format_double(r.x) << ',' << r.h << ',' << format_double(r.value)
       << ',' << format_double(r.argmax_y) << ',' << r.argmax_l << '\n';
  }
}

}  // namespace goldbach3
