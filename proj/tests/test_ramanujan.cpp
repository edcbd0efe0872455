#include <catch2/catch.hpp>

#include <cmath>
#include <complex>
#include <numeric>

#include "goldbach3/ramanujan.hpp"
#include "test_support.hpp"

using namespace goldbach3;

namespace {
// Enumerate all reduced residues mod q, with the a = 0 convention at q = 1.
std::vector<std::uint64_t> reduced(std::uint64_t q) {
  if (q == 1) return {0};
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a < q; ++a)
    if (std::gcd(a, q) == 1) out.push_back(a);
  return out;
}
}  // namespace

TEST_CASE("closed form equals brute force on a moderate sweep") {
  for (std::uint64_t q = 1; q <= 24; ++q) {
    for (std::uint64_t qj = 1; qj <= 8; ++qj) {
      for (const std::uint64_t a : reduced(q)) {
        for (const std::uint64_t aj : reduced(qj)) {
          const cplx cf = ramanujan_constrained(a, q, aj, qj);
          const cplx bf = ramanujan_bruteforce(a, q, aj, qj);
          REQUIRE(std::abs(cf - bf) <= 1e-9);
          // |c_j| is 0 or 1
          const double m = std::abs(cf);
          REQUIRE((m <= 1e-9 || std::abs(m - 1.0) <= 1e-9));
        }
      }
    }
  }
}

TEST_CASE("constrained Ramanujan sum examples") {
  CHECK(std::abs(ramanujan_constrained(1, 3, 0, 1) - cplx(-1.0, 0.0)) < 1e-12);
  CHECK(std::abs(ramanujan_constrained(1, 4, 1, 2)) < 1e-12);
  CHECK(std::abs(ramanujan_constrained(1, 5, 2, 5) - unit_phase(0.4)) < 1e-12);
  CHECK(std::abs(ramanujan_bruteforce(1, 3, 0, 1) - cplx(-1.0, 0.0)) < 1e-12);
  CHECK(std::abs(ramanujan_bruteforce(1, 1, 0, 1) - cplx(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(ramanujan_bruteforce(1, 4, 1, 2)) < 1e-12);
  CHECK_THROWS_AS(ramanujan_constrained(2, 4, 0, 1), validation_error);
  CHECK_THROWS_AS(ramanujan_bruteforce(1, 200001, 0, 1), capacity_error);
}

TEST_CASE("factorization of c_j under the coprime splitting") {
  // a = at*qb + ab*qt with at = a qb^-1 mod qt, ab = a qt^-1 mod qb
  Rng rng(404);
  for (std::uint64_t qb = 1; qb <= 14; ++qb) {
    for (std::uint64_t qt = 1; qt <= 14; ++qt) {
      if (std::gcd(qb, qt) != 1) continue;
      const std::uint64_t q = qb * qt;
      for (const std::uint64_t a : reduced(q)) {
        const std::uint64_t at = qt == 1 ? 0 : mulmod(a % qt, invmod(qb % qt, qt), qt);
        const std::uint64_t ab = qb == 1 ? 0 : mulmod(a % qb, invmod(qt % qb, qb), qb);
        const std::uint64_t qj = rng.between(1, 9);
        const std::uint64_t aj = testsupport::random_reduced_residue(rng, qj);
        const cplx whole = ramanujan_constrained(a, q, aj, qj);
        const cplx split = ramanujan_constrained(at == 0 && qt == 1 ? 0 : at, qt, aj, qj) *
                           ramanujan_constrained(ab == 0 && qb == 1 ? 0 : ab, qb, aj, qj);
        REQUIRE(std::abs(whole - split) <= 1e-9);
      }
    }
  }
}

TEST_CASE("b is multiplicative over coprime moduli") {
  Rng rng(777);
  for (int iter = 0; iter < 60; ++iter) {
    const auto c = testsupport::random_constraint(rng, 500, 12);
    std::uint64_t qb = rng.between(1, 30), qt = rng.between(1, 30);
    if (std::gcd(qb, qt) != 1) continue;
    const cplx whole = b_coeff(qb * qt, c);
    const cplx split = b_coeff(qb, c) * b_coeff(qt, c);
    REQUIRE(std::abs(whole - split) <= 1e-9 * std::max(1.0, std::abs(split)));
  }
}

TEST_CASE("lambda is multiplicative over coprime moduli (definitional route)") {
  Rng rng(778);
  for (int iter = 0; iter < 40; ++iter) {
    const auto c = testsupport::random_constraint(rng, 500, 12);
    const std::uint64_t qb = rng.between(1, 30), qt = rng.between(1, 30);
    if (std::gcd(qb, qt) != 1) continue;
    const double whole = lambda_coeff_definitional(qb * qt, c);
    const double split =
        lambda_coeff_definitional(qb, c) * lambda_coeff_definitional(qt, c);
    REQUIRE(whole == Approx(split).margin(1e-9));
  }
}

TEST_CASE("b_coeff case values at q = 3") {
  // all moduli coprime to 3, 3 does not divide n: case (B), b = 1
  const Constraint cb = Constraint::make(7, 2, 1, 5, 2, 4, 3);
  CHECK(b_coeff(3, cb).real() == Approx(1.0).margin(1e-12));
  CHECK(std::abs(b_coeff(3, cb).imag()) < 1e-12);

  // 3 | q1, 3 coprime to q2 q3, 3 | a1 - n: case (C), b = p - 1 = 2
  const Constraint cc = Constraint::make(7, 3, 1, 5, 2, 4, 3);
  CHECK(b_coeff(3, cc).real() == Approx(2.0).margin(1e-12));

  // q = 1 convention
  CHECK(b_coeff(1, cb).real() == 1.0);
}

TEST_CASE("b_prime_power classification values") {
  // p^k divides every modulus and the compatibility congruence holds:
  // b(p^k) = phi(p^k)
  const Constraint c1 = Constraint::make(9, 3, 1, 3, 1, 3, 1);  // 1+1+1 = 9 mod 3
  CHECK(b_prime_power(3, 1, c1) == 2.0);

  // p | q_j but p^k does not: c_j vanishes identically
  const Constraint c2 = Constraint::make(9, 2, 1, 1, 0, 1, 0);
  CHECK(b_prime_power(2, 2, c2) == 0.0);

  // p | q1, q2 and p coprime to q3 with p | a1 + a2 - n: case (E), b = 1 - p
  const Constraint c3 = Constraint::make(9, 5, 2, 5, 2, 2, 1);  // 5 | 2+2-9
  CHECK(b_prime_power(5, 1, c3) == -4.0);

  CHECK_THROWS_AS(b_prime_power(4, 1, c1), validation_error);
}

TEST_CASE("b definitional equals b multiplicative") {
  Rng rng(1234);
  for (int iter = 0; iter < 50; ++iter) {
    const auto c = testsupport::random_constraint(rng, 300, 10);
    for (std::uint64_t q = 1; q <= 40; ++q) {
      const double def = b_coeff(q, c).real();
      const double mul = b_multiplicative(q, c);
      REQUIRE(def == Approx(mul).margin(1e-9));
      REQUIRE(std::abs(b_coeff(q, c).imag()) <=
              1e-9 * std::max(1.0, std::abs(def)));
    }
  }
}

TEST_CASE("b is integer-valued within tolerance") {
  Rng rng(909);
  for (int iter = 0; iter < 20; ++iter) {
    const auto c = testsupport::random_constraint(rng, 400, 10);
    for (std::uint64_t q = 1; q <= 60; ++q) {
      const double v = b_coeff(q, c).real();
      REQUIRE(std::abs(v - std::round(v)) <= 1e-9);
    }
  }
}

TEST_CASE("lambda table values") {
  // q = 3 in case (B): 1/(p-1)^3 = 1/8
  const Constraint cb = Constraint::make(7, 2, 1, 5, 2, 4, 3);
  CHECK(lambda_coeff(3, cb) == 0.125);

  // case (E) at p: lambda = -1 exactly
  const Constraint ce = Constraint::make(9, 5, 2, 5, 2, 2, 1);
  CHECK(lambda_coeff(5, ce) == -1.0);

  // lambda(1) = 1
  CHECK(lambda_coeff(1, cb) == 1.0);

  // multiplicative route equals the ratio * definitional b route
  Rng rng(31337);
  for (int iter = 0; iter < 30; ++iter) {
    const auto c = testsupport::random_constraint(rng, 400, 10);
    for (std::uint64_t q = 1; q <= 30; ++q)
      REQUIRE(lambda_coeff(q, c) ==
              Approx(lambda_coeff_definitional(q, c)).margin(1e-9));
  }
}
