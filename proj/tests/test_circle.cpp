#include <catch2/catch.hpp>

#include <cmath>
#include <complex>

#include "goldbach3/circle.hpp"
#include "test_support.hpp"

using namespace goldbach3;

namespace {
const MangoldtTable& table4k() {
  static const MangoldtTable t = build_tables(4200);
  return t;
}
}  // namespace

TEST_CASE("exp_sum at alpha = 0 equals the progression psi") {
  const auto& t = table4k();
  const Constraint c = Constraint::make(100, 3, 1, 4, 3, 1, 0);
  for (int j = 1; j <= 3; ++j) {
    double expect = 0.0;
    for (std::uint64_t m = 2; m <= 100; ++m)
      if (m % c.q[j - 1] == c.a[j - 1]) expect += t.lambda(m);
    const cplx v = exp_sum(j, 0.0, c, t);
    CHECK(v.real() == Approx(expect).epsilon(1e-12));
    CHECK(std::abs(v.imag()) < 1e-12);
  }
}

TEST_CASE("M(1/2) alternating sum parity") {
  CHECK(std::abs(m_sum(0.5, 9) - cplx(-1.0, 0.0)) < 1e-9);
  CHECK(std::abs(m_sum(0.5, 10)) < 1e-9);
}

TEST_CASE("S(1/2) for n = 10 matches the seven-term sum") {
  const auto& t = table4k();
  const Constraint c = Constraint::make(10, 1, 0, 1, 0, 1, 0);
  const double expect = 3 * std::log(2.0) - 2 * std::log(3.0) -
                        std::log(5.0) - std::log(7.0);
  CHECK(exp_sum(1, 0.5, c, t).real() == Approx(expect).margin(1e-9));
}

TEST_CASE("grid values match definitional sums at random points") {
  const auto& t = table4k();
  const Constraint c = Constraint::make(500, 3, 2, 2, 1, 1, 0);
  const std::uint64_t N = 1001;
  const auto grid = exp_sum_grid(c, N, t);
  REQUIRE(grid.s1.size() == N);
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t k = rng.below(N);
    const double alpha = static_cast<double>(k) / static_cast<double>(N);
    const cplx direct1 = exp_sum(1, alpha, c, t);
    const cplx direct2 = exp_sum(2, alpha, c, t);
    REQUIRE(std::abs(grid.s1[k] - direct1) <=
            1e-9 * std::max(1.0, std::abs(direct1)));
    REQUIRE(std::abs(grid.s2[k] - direct2) <=
            1e-9 * std::max(1.0, std::abs(direct2)));
    const cplx dm = m_sum(alpha, c.n);
    REQUIRE(std::abs(grid.m[k] - dm) <= 1e-9 * std::max(1.0, std::abs(dm)));
    REQUIRE(std::abs(grid.m[k]) <= static_cast<double>(c.n) + 1e-9);
  }
  // S_j(0) = psi(n; q_j, a_j)
  CHECK(grid.s1[0].real() == Approx(exp_sum(1, 0.0, c, t).real()));
}

TEST_CASE("grid folding stays exact for N below n") {
  const auto& t = table4k();
  const Constraint c = Constraint::make(200, 3, 1, 1, 0, 1, 0);
  const std::uint64_t N = 23;  // e(mk/N) only depends on m mod N
  const auto grid = exp_sum_grid(c, N, t);
  for (std::uint64_t k = 0; k < N; ++k) {
    const double alpha = static_cast<double>(k) / static_cast<double>(N);
    const cplx direct = exp_sum(1, alpha, c, t);
    REQUIRE(std::abs(grid.s1[k] - direct) <=
            1e-9 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("Parseval on the grid") {
  const auto& t = table4k();
  const Constraint c = Constraint::make(700, 5, 2, 3, 1, 2, 1);
  const std::uint64_t N = 701;  // N >= n + 1: no folding collisions
  const auto grid = exp_sum_grid(c, N, t);
  for (int j = 0; j < 3; ++j) {
    const auto& s = (j == 0 ? grid.s1 : j == 1 ? grid.s2 : grid.s3);
    double mean_sq = 0.0;
    for (const cplx& v : s) mean_sq += std::norm(v);
    mean_sq /= static_cast<double>(N);
    double expect = 0.0;
    for (std::uint64_t m = 2; m <= 700; ++m)
      if (m % c.q[j] == c.a[j]) expect += t.lambda(m) * t.lambda(m);
    REQUIRE(near(mean_sq, expect, 1e-6));
  }
}

TEST_CASE("arc construction") {
  const auto set = arcs_build(100, 2.0);
  REQUIRE(set.arcs.size() == 2);
  CHECK(set.arcs[0].q == 1);
  CHECK(set.arcs[0].center == 0.0);
  CHECK(set.arcs[0].halfwidth == Approx(0.02));
  CHECK(set.arcs[1].q == 2);
  CHECK(set.arcs[1].center == Approx(0.5));
  CHECK(set.arcs[1].halfwidth == Approx(0.01));
  CHECK(set.contains(0.5));
  CHECK(set.contains(0.995));  // wraps to the 0-arc
  CHECK_FALSE(set.contains(0.25));

  const auto only_wrap = arcs_build(100, 1.0);
  REQUIRE(only_wrap.arcs.size() == 1);
  CHECK(only_wrap.arcs[0].q == 1);

  CHECK_THROWS_AS(arcs_build(100, 0.5), validation_error);
}

TEST_CASE("arcs are pairwise disjoint when 2 R^2 <= n") {
  for (const auto& [n, R] : std::vector<std::pair<std::int64_t, double>>{
           {100, 5.0}, {1000, 12.0}, {5000, 40.0}}) {
    REQUIRE(2 * R * R <= static_cast<double>(n));
    const auto set = arcs_build(n, R);
    for (std::size_t i = 0; i < set.arcs.size(); ++i) {
      for (std::size_t j = i + 1; j < set.arcs.size(); ++j) {
        const double d = ArcSet::circle_distance(set.arcs[i].center,
                                                 set.arcs[j].center);
        REQUIRE(d >= set.arcs[i].halfwidth + set.arcs[j].halfwidth - 1e-15);
      }
    }
  }
}

TEST_CASE("dft identity equals direct counts") {
  const auto& t = table4k();
  CHECK(dft_identity(Constraint::make(6, 1, 0, 1, 0, 1, 0), 13, t) ==
        Approx(std::pow(std::log(2.0), 3)).epsilon(1e-9));
  CHECK(dft_identity(Constraint::make(3, 1, 0, 1, 0, 1, 0), 7, t) ==
        Approx(0.0).margin(1e-9));
  const Constraint c9 = Constraint::make(9, 1, 0, 1, 0, 1, 0);
  CHECK(dft_identity(c9, 19, t) == Approx(count_direct(c9, t).j3).epsilon(1e-9));

  Rng rng(6);
  for (int iter = 0; iter < 8; ++iter) {
    const auto c = testsupport::random_constraint(rng, 900, 7);
    const std::uint64_t N = 2 * static_cast<std::uint64_t>(c.n) + 1;
    const double direct = count_direct(c, t).j3;
    REQUIRE(near(dft_identity(c, N, t), direct, 1e-6));
  }
}

TEST_CASE("dft identity refuses aliasing grids") {
  const auto& t = table4k();
  CHECK_THROWS_AS(dft_identity(Constraint::make(9, 1, 0, 1, 0, 1, 0), 18, t),
                  validation_error);
}

TEST_CASE("major + minor equals the identity value exactly") {
  const auto& t = table4k();
  const Constraint c = Constraint::make(201, 2, 1, 3, 2, 1, 0);
  const std::uint64_t N = 403;
  const auto split = major_arc_integral(c, 3.0, N, t);
  CHECK(split.j3_major + split.j3_minor ==
        Approx(split.j3_total).margin(1e-12));
  CHECK(split.j3_total == Approx(dft_identity(c, N, t)).margin(1e-9));

  // R big enough that the arcs cover the whole circle: minor part vanishes
  const auto full = major_arc_integral(c, 100.0, N, t);
  CHECK(full.j3_minor == Approx(0.0).margin(1e-12));
  CHECK(full.j3_major == Approx(full.j3_total).margin(1e-12));
}

TEST_CASE("truncated H at R = 1 is the lambda(1) term") {
  const Constraint c = Constraint::make(101, 3, 1, 4, 1, 1, 0);
  const double expect =
      101.0 * 101.0 / (2.0 * phi_of(3) * phi_of(4) * phi_of(1));
  CHECK(truncated_H(c, 1.0) == Approx(expect).epsilon(1e-12));
}

TEST_CASE("truncated H approaches the main term for admissible constraints") {
  const Constraint c = Constraint::make(2001, 1, 0, 1, 0, 1, 0);
  const auto s3 = singular_series(c);
  const double main = main_term(c, s3.midpoint());
  const double h100 = truncated_H(c, 100.0);
  const double h1000 = truncated_H(c, 1000.0);
  CHECK(std::abs(h1000 - main) < std::abs(h100 - main) + 1e-6);
  CHECK(std::abs(h1000 - main) / main < 0.01);
}

TEST_CASE("truncated H picks up the cancelling term at an E prime") {
  // (E) at 3: lambda(3) = -1, so the q = 3 term cancels the q = 1 term's
  // contribution scaled by the phi ratio
  const Constraint c = Constraint::make(9, 3, 1, 3, 2, 1, 0);
  const double h1 = truncated_H(c, 1.0);
  const double h3 = truncated_H(c, 3.0);
  // lambda(1) = 1, lambda(2) = lambda_coeff(2, c), lambda(3) = -1
  const double scale = 81.0 / (2.0 * phi_of(3) * phi_of(3) * phi_of(1));
  CHECK(h1 == Approx(scale).epsilon(1e-12));
  CHECK(h3 == Approx(scale * (1.0 + lambda_coeff(2, c) - 1.0)).margin(1e-9));
}
