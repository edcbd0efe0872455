#pragma once

// Constrained Ramanujan sums c_j(a,q), the coefficients b(q) and lambda(q),
// their closed forms, multiplicativity, and vanishing rules.
//
// All functions here are pure and table-free (trial division is cheap at the
// modulus sizes involved).

#include <complex>
#include <cstdint>
#include <numeric>
#include <string>

#include "goldbach3/arith.hpp"
#include "goldbach3/common.hpp"
#include "goldbach3/constraint.hpp"
#include "goldbach3/fft.hpp"

namespace goldbach3 {

inline constexpr std::uint64_t kBruteForceLimit = 100'000;

// Closed form:
//   c_j(a,q) = mu(q/d) e(a u a_j / d)   if gcd(d, q/d) = 1, with d = (q_j, q)
//              and u the inverse of q/d mod d,
//            = 0                        otherwise.
// The modulus of a nonzero value is always 1.
inline cplx ramanujan_constrained(std::uint64_t a, std::uint64_t q,
                                  std::uint64_t a_j, std::uint64_t q_j) {
  if (q < 1 || q_j < 1)
    throw validation_error("ramanujan_constrained: moduli must be >= 1");
  if (std::gcd(a, q) != 1)
    throw validation_error("ramanujan_constrained: gcd(a, q) != 1");
  if (std::gcd(a_j, q_j) != 1)
    throw validation_error("ramanujan_constrained: gcd(a_j, q_j) != 1");
  const std::uint64_t d = std::gcd(q_j, q);
  const std::uint64_t qd = q / d;
  if (std::gcd(d, qd) != 1) return {};
  const int mu = mu_of(qd);
  if (mu == 0) return {};
  if (d == 1) return {static_cast<double>(mu), 0.0};
  const std::uint64_t u = invmod(qd % d, d);
  const std::uint64_t num = mulmod(mulmod(a % d, u, d), a_j % d, d);
  return static_cast<double>(mu) * unit_phase_ratio(num, d);
}

// Literal sum over the residue class; the oracle for the closed form.
//   c_j(a,q) = sum over 1 <= k <= q, (k,q)=1, k = a_j mod (q_j,q) of e(ka/q).
// Including k = q keeps the q = 1 convention c_j(a,1) = 1.
inline cplx ramanujan_bruteforce(std::uint64_t a, std::uint64_t q,
                                 std::uint64_t a_j, std::uint64_t q_j) {
  if (q < 1 || q_j < 1)
    throw validation_error("ramanujan_bruteforce: moduli must be >= 1");
  if (q > kBruteForceLimit)
    throw capacity_error("ramanujan_bruteforce: q=" + std::to_string(q) +
                         " exceeds oracle limit " +
                         std::to_string(kBruteForceLimit));
  if (std::gcd(a, q) != 1 || std::gcd(a_j, q_j) != 1)
    throw validation_error("ramanujan_bruteforce: arguments not reduced");
  const std::uint64_t d = std::gcd(q_j, q);
  cplx sum{};
  for (std::uint64_t k = 1; k <= q; ++k) {
    if (std::gcd(k, q) != 1) continue;
    if (k % d != a_j % d) continue;
    sum += unit_phase_ratio(mulmod(k, a % q, q), q);
  }
  return sum;
}

// b(q) := sum over a < q, (a,q)=1 of (c1 c2 c3)(a,q) e(-na/q); b(1) = 1.
// Definitional route, used as one side of the cross-check pair.
inline cplx b_coeff(std::uint64_t q, const Constraint& c) {
  c.validate();
  if (q < 1) throw validation_error("b_coeff: q must be >= 1");
  if (q == 1) return {1.0, 0.0};
  const std::uint64_t neg_n = mod_i64(-c.n, q);
  cplx sum{};
  for (std::uint64_t a = 1; a < q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    cplx prod{1.0, 0.0};
    for (int j = 0; j < 3 && prod != cplx{}; ++j)
      prod *= ramanujan_constrained(a, q, c.a[j], c.q[j]);
    if (prod == cplx{}) continue;
    sum += prod * unit_phase_ratio(mulmod(neg_n, a, q), q);
  }
  return sum;
}

// b at prime powers, by classification. Writing s = a1 + a2 + a3 - n:
//
//   c_j(a, p^k) = 0 unless p^k | q_j or (p does not divide q_j and k = 1),
//   so b(p^k) = 0 unless that holds for every j.  In the surviving cases:
//
//   p^k | (q1,q2,q3):  b(p^k) = phi(p^k)     if p^k | s
//                               -p^(k-1)     if p^(k-1) || s
//                               0            otherwise
//   (the first line is the only one reachable when the compatibility
//   congruence n = a1+a2+a3 mod (q1,q2,q3) holds)
//
//   k = 1, counting how many q_j the prime divides:
//     none:  1-p if p | n            (A)      1 if not          (B)
//     one j: p-1 if p | a_j - n      (C)     -1 if not          (D)
//     two j,k: 1-p if p | a_j+a_k-n  (E)      1 if not          (F)
inline double b_prime_power(std::uint64_t p, int k, const Constraint& c) {
  c.validate();
  if (!is_prime_u64(p)) throw validation_error("b_prime_power: p must be prime");
  if (k < 1) throw validation_error("b_prime_power: k must be >= 1");
  const std::uint64_t pk = pow_u64(p, k);
  bool all_full = true;
  int divisible = 0, idx[2] = {-1, -1};
  for (int j = 0; j < 3; ++j) {
    const bool full = (c.q[j] % pk == 0);
    const bool div_p = (c.q[j] % p == 0);
    if (!full) {
      all_full = false;
      if (div_p || k != 1) return 0.0;  // c_j(a, p^k) = 0 for every a
    }
    if (div_p) {
      if (divisible < 2) idx[divisible] = j;
      ++divisible;
    }
  }
  if (all_full) {
    const std::int64_t s = static_cast<std::int64_t>(c.a[0] + c.a[1] + c.a[2]) - c.n;
    if (mod_i64(s, pk) == 0)
      return static_cast<double>(pk - pk / p);  // phi(p^k)
    if (k >= 2 && mod_i64(s, pk / p) == 0)
      return -static_cast<double>(pk / p);
    if (k == 1) return -1.0;
    return 0.0;
  }
  // Here k == 1.
  const auto divides = [&](std::int64_t v) { return mod_i64(v, p) == 0; };
  switch (divisible) {
    case 0:
      return divides(c.n) ? 1.0 - static_cast<double>(p) : 1.0;
    case 1: {
      const std::int64_t t = static_cast<std::int64_t>(c.a[idx[0]]) - c.n;
      return divides(t) ? static_cast<double>(p) - 1.0 : -1.0;
    }
    default: {  // two of three
      const std::int64_t t =
          static_cast<std::int64_t>(c.a[idx[0]] + c.a[idx[1]]) - c.n;
      return divides(t) ? 1.0 - static_cast<double>(p) : 1.0;
    }
  }
}

// Product of b over the prime powers of q (Prop-2 route of the cross-check).
inline double b_multiplicative(std::uint64_t q, const Constraint& c) {
  c.validate();
  if (q < 1) throw validation_error("b_multiplicative: q must be >= 1");
  double prod = 1.0;
  for (const auto& [p, e] : factorize(q)) {
    prod *= b_prime_power(p, e, c);
    if (prod == 0.0) return 0.0;
  }
  return prod;
}

// phi(q1)phi(q2)phi(q3) / (phi([q1,q]) phi([q2,q]) phi([q3,q]))
inline double lambda_ratio(std::uint64_t q, const Constraint& c) {
  double r = 1.0;
  for (int j = 0; j < 3; ++j)
    r *= static_cast<double>(phi_of(c.q[j])) /
         static_cast<double>(phi_of(lcm_u64(c.q[j], q)));
  return r;
}

// lambda at a prime power. The phi-ratio only differs from 1 at p itself,
// which gives the closed table at k = 1:
//   1/(p-1)^3 (B),  -1/(p-1)^2 (A),(D),  1/(p-1) (C),(F),  -1 (E)
// and lambda(p^k) = b(p^k) when p^k divides every modulus. The table values
// are single divisions of exact integers, so each result is the correctly
// rounded double of the underlying rational.
inline double lambda_prime_power(std::uint64_t p, int k, const Constraint& c) {
  const double b = b_prime_power(p, k, c);
  if (b == 0.0) return 0.0;
  int divisible = 0;
  for (int j = 0; j < 3; ++j)
    if (c.q[j] % p == 0) ++divisible;
  if (divisible == 3) return b;  // [q_j, p^k] = q_j for every j
  // Here k == 1 (a nonzero b with some q_j coprime to p forces it).
  const double pm1 = static_cast<double>(p - 1);
  switch (divisible) {
    case 0:
      return b > 0.0 ? 1.0 / (pm1 * pm1 * pm1) : -1.0 / (pm1 * pm1);
    case 1:
      return b > 0.0 ? 1.0 / pm1 : -1.0 / (pm1 * pm1);
    default:
      return b > 0.0 ? 1.0 / pm1 : -1.0;
  }
}

// lambda(q) via the multiplicative route; lambda(1) = 1.
inline double lambda_coeff(std::uint64_t q, const Constraint& c) {
  c.validate();
  if (q < 1) throw validation_error("lambda_coeff: q must be >= 1");
  double prod = 1.0;
  for (const auto& [p, e] : factorize(q)) {
    prod *= lambda_prime_power(p, e, c);
    if (prod == 0.0) return 0.0;
  }
  return prod;
}

// lambda(q) from the definitional b(q); the independent side of cross-checks.
inline double lambda_coeff_definitional(std::uint64_t q, const Constraint& c) {
  return lambda_ratio(q, c) * b_coeff(q, c).real();
}

}  // namespace goldbach3
