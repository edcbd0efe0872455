#include <catch2/catch.hpp>

#include <cmath>
#include <numeric>

#include "goldbach3/counting.hpp"
#include "test_support.hpp"

using namespace goldbach3;

namespace {
const MangoldtTable& table20k() {
  static const MangoldtTable t = build_tables(20000);
  return t;
}

// Exhaustive triple enumeration over raw integers; independent of the
// library's prime-power machinery.
RepCounts oracle_counts(const Constraint& c) {
  RepCounts rc;
  const std::int64_t n = c.n;
  for (std::int64_t m1 = 2; m1 <= n - 4; ++m1) {
    const auto [p1, k1] = testsupport::oracle_prime_power(m1);
    if (k1 == 0 || m1 % static_cast<std::int64_t>(c.q[0]) !=
                       static_cast<std::int64_t>(c.a[0]))
      continue;
    for (std::int64_t m2 = 2; m1 + m2 <= n - 2; ++m2) {
      const auto [p2, k2] = testsupport::oracle_prime_power(m2);
      if (k2 == 0 || m2 % static_cast<std::int64_t>(c.q[1]) !=
                         static_cast<std::int64_t>(c.a[1]))
        continue;
      const std::int64_t m3 = n - m1 - m2;
      const auto [p3, k3] = testsupport::oracle_prime_power(m3);
      if (k3 == 0 || m3 % static_cast<std::int64_t>(c.q[2]) !=
                         static_cast<std::int64_t>(c.a[2]))
        continue;
      const double w = std::log(double(p1)) * std::log(double(p2)) *
                       std::log(double(p3));
      rc.j3 += w;
      if (k1 == 1 && k2 == 1 && k3 == 1) {
        rc.r3big += w;
        rc.r3 += 1;
      } else if (k1 >= 2 && k2 >= 2) {
        rc.w1 += 1;
      } else if (k1 == 1 && k2 >= 2) {
        rc.w2 += 1;
      } else if (k1 >= 2 && k2 == 1) {
        rc.w3 += 1;
      } else {
        rc.w4 += 1;
      }
    }
  }
  return rc;
}
}  // namespace

TEST_CASE("count_direct small exact cases") {
  const auto& t = table20k();
  const auto r7 = count_direct(Constraint::make(7, 1, 0, 1, 0, 1, 0), t);
  CHECK(r7.r3 == 3);
  CHECK(r7.w_total() == 0);
  CHECK(r7.j3 == Approx(3.0 * std::log(2.0) * std::log(2.0) * std::log(3.0))
                     .epsilon(1e-12));

  const auto r8 = count_direct(Constraint::make(8, 1, 0, 1, 0, 1, 0), t);
  CHECK(r8.r3 == 3);
  CHECK(r8.w1 == 0);
  CHECK(r8.w2 == 1);
  CHECK(r8.w3 == 1);
  CHECK(r8.w4 == 1);

  const auto r3v = count_direct(Constraint::make(3, 1, 0, 1, 0, 1, 0), t);
  CHECK(r3v.j3 == 0.0);
  CHECK(r3v.r3 == 0);
  CHECK(r3v.w_total() == 0);
}

TEST_CASE("count_direct equals the exhaustive oracle") {
  const auto& t = table20k();
  Rng rng(13);
  for (int iter = 0; iter < 12; ++iter) {
    const auto c = testsupport::random_constraint(rng, 600, 8);
    const auto lib = count_direct(c, t);
    const auto orc = oracle_counts(c);
    REQUIRE(lib.r3 == orc.r3);
    REQUIRE(lib.w1 == orc.w1);
    REQUIRE(lib.w2 == orc.w2);
    REQUIRE(lib.w3 == orc.w3);
    REQUIRE(lib.w4 == orc.w4);
    REQUIRE(lib.j3 == Approx(orc.j3).margin(1e-9));
    REQUIRE(lib.r3big == Approx(orc.r3big).margin(1e-9));
  }
}

TEST_CASE("J2 profile examples") {
  const auto& t = table20k();
  const auto prof = j2_profile(Constraint::make(9, 1, 0, 1, 0, 1, 0), t);
  CHECK(prof[4] == Approx(std::log(2.0) * std::log(2.0)).epsilon(1e-12));
  CHECK(prof[3] == 0.0);

  const auto prof2 = j2_profile(Constraint::make(9, 1, 0, 2, 1, 1, 0), t);
  // pairs m2 + m3 = 5 with m2 odd: only (3, 2)
  CHECK(prof2[5] == Approx(std::log(3.0) * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("J2 profile full sum equals the product of progression sums") {
  const auto& t = table20k();
  Rng rng(14);
  for (int iter = 0; iter < 8; ++iter) {
    const auto c = testsupport::random_constraint(rng, 800, 6);
    const auto prof = j2_profile(c, t);
    double total = 0.0;
    for (const double v : prof) total += v;
    double s2 = 0.0, s3 = 0.0;
    for (std::uint64_t m = 2; m <= static_cast<std::uint64_t>(c.n); ++m) {
      if (m % c.q[1] == c.a[1]) s2 += t.lambda(m);
      if (m % c.q[2] == c.a[2]) s3 += t.lambda(m);
    }
    REQUIRE(total == Approx(s2 * s3).epsilon(1e-9).margin(1e-9));
  }
}

TEST_CASE("convolution engine equals direct enumeration") {
  const auto& t = table20k();
  const Constraint c6 = Constraint::make(6, 1, 0, 1, 0, 1, 0);
  CHECK(count_convolution(c6, t) ==
        Approx(std::pow(std::log(2.0), 3)).epsilon(1e-12));
  CHECK(count_convolution(Constraint::make(3, 1, 0, 1, 0, 1, 0), t) == 0.0);

  Rng rng(15);
  for (int iter = 0; iter < 10; ++iter) {
    const auto c = testsupport::random_constraint(rng, 2000, 10);
    const double direct = count_direct(c, t).j3;
    const double conv = count_convolution(c, t);
    REQUIRE(near(conv, direct, 1e-9));
  }
}

TEST_CASE("transform-based profile is spot-checked and matches direct") {
  const auto& t = table20k();
  // n above the crossover forces the FFT path
  const Constraint c = Constraint::make(17001, 1, 0, 2, 1, 3, 2);
  const auto prof = j2_profile(c, t);  // internal spot check runs here
  // external check at a few indices
  Rng rng(16);
  for (int i = 0; i < 8; ++i) {
    const std::uint64_t m = rng.between(4, 2 * 17001);
    double direct = 0.0;
    for (std::uint64_t m2 = 2; m2 + 2 <= m; ++m2) {
      if (m2 > 17001 || m2 % c.q[1] != c.a[1]) continue;
      const std::uint64_t m3 = m - m2;
      if (m3 > 17001 || m3 % c.q[2] != c.a[2]) continue;
      direct += t.lambda(m2) * t.lambda(m3);
    }
    REQUIRE(near(prof[m], direct, 1e-9));
  }
}

TEST_CASE("J3 is symmetric under permutations of the pairs") {
  const auto& t = table20k();
  Rng rng(17);
  for (int iter = 0; iter < 6; ++iter) {
    const auto c = testsupport::random_constraint(rng, 1500, 9);
    const double base = count_direct(c, t).j3;
    const int perms[5][3] = {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms) {
      const Constraint cp = Constraint::make(c.n, c.q[p[0]], c.a[p[0]],
                                             c.q[p[1]], c.a[p[1]],
                                             c.q[p[2]], c.a[p[2]]);
      REQUIRE(count_direct(cp, t).j3 == Approx(base).margin(1e-9));
    }
  }
}

TEST_CASE("defect inequality |r3big - j3| <= (log n)^3 w_total") {
  const auto& t = table20k();
  Rng rng(18);
  for (int iter = 0; iter < 20; ++iter) {
    const auto c = testsupport::random_constraint(rng, 3000, 8);
    const auto rc = count_direct(c, t);
    const double logn3 = std::pow(std::log(static_cast<double>(c.n)), 3);
    REQUIRE(std::abs(rc.r3big - rc.j3) <=
            logn3 * static_cast<double>(rc.w_total()) + 1e-9);
  }
}

TEST_CASE("main_term arithmetic") {
  CHECK(main_term(Constraint::make(10, 1, 0, 1, 0, 1, 0), 1.0) == 50.0);
  CHECK(main_term(Constraint::make(10, 1, 0, 1, 0, 1, 0), 0.0) == 0.0);
  CHECK(main_term(Constraint::make(100, 3, 1, 4, 1, 1, 0), 2.0) == 2500.0);
  CHECK_THROWS_AS(main_term(Constraint::make(10, 1, 0, 1, 0, 1, 0), -1.0),
                  validation_error);
}

TEST_CASE("deviation scan: single trivial cell") {
  const auto& t = table20k();
  DeviationScanConfig cfg;
  cfg.n = 2001;
  cfg.q1s = {1};
  cfg.q2s = {1};
  cfg.q3s = {1};
  const auto res = deviation_scan(cfg, t);
  REQUIRE(res.rows.size() == 1);
  const auto& row = res.rows[0];
  CHECK(row.c.q[0] == 1);
  const double expect_rel = row.abs_dev / std::max(row.main, 1.0);
  CHECK(row.rel_dev == Approx(expect_rel));
  CHECK(res.aggregate == Approx(row.abs_dev).margin(1e-9));
  CHECK(res.sampled_cells == 0);
  // j3 in the row comes from the direct engine
  CHECK(row.j3 == Approx(count_direct(row.c, t).j3));
}

TEST_CASE("deviation scan: empty ranges give empty output") {
  const auto& t = table20k();
  DeviationScanConfig cfg;
  cfg.n = 101;
  const auto res = deviation_scan(cfg, t);
  CHECK(res.rows.empty());
  CHECK(res.aggregate == 0.0);
}

TEST_CASE("deviation scan: even n rows report raw j3 against main = 0") {
  const auto& t = table20k();
  DeviationScanConfig cfg;
  cfg.n = 100;
  cfg.q1s = {1, 2};
  cfg.q2s = {1};
  cfg.q3s = {1};
  const auto res = deviation_scan(cfg, t);
  REQUIRE_FALSE(res.rows.empty());
  for (const auto& row : res.rows) {
    CHECK(row.main == 0.0);
    CHECK(row.abs_dev == Approx(row.j3));
  }
}

TEST_CASE("deviation scan is deterministic and thread-count independent") {
  const auto& t = table20k();
  DeviationScanConfig cfg;
  cfg.n = 501;
  cfg.q1s = {1, 2, 3};
  cfg.q2s = {1, 2};
  cfg.q3s = {1, 2};
  cfg.seed = 42;
  cfg.threads = 1;
  const auto r1 = deviation_scan(cfg, t);
  cfg.threads = 4;
  const auto r2 = deviation_scan(cfg, t);
  REQUIRE(r1.rows.size() == r2.rows.size());
  CHECK(r1.aggregate == r2.aggregate);
  for (std::size_t i = 0; i < r1.rows.size(); ++i) {
    CHECK(r1.rows[i].c == r2.rows[i].c);
    CHECK(r1.rows[i].j3 == r2.rows[i].j3);
    CHECK(r1.rows[i].rel_dev == r2.rows[i].rel_dev);
  }
}

TEST_CASE("deviation rows are sorted by rel_dev descending") {
  const auto& t = table20k();
  DeviationScanConfig cfg;
  cfg.n = 999;
  cfg.q1s = {1, 2, 3, 4};
  cfg.q2s = {1, 3};
  cfg.q3s = {1};
  const auto res = deviation_scan(cfg, t);
  for (std::size_t i = 1; i < res.rows.size(); ++i)
    REQUIRE(res.rows[i - 1].rel_dev >= res.rows[i].rel_dev);
}
