#pragma once

// Shared helpers for the test suites: seeded constraint generators and
// small independent oracles (trial-division primes, exhaustive counts).

#include <cstdint>
#include <numeric>
#include <vector>

#include "goldbach3/common.hpp"
#include "goldbach3/constraint.hpp"

namespace testsupport {

// Independent primality, deliberately not using any library sieve.
inline bool oracle_is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> oracle_primes_upto(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t m = 2; m <= n; ++m)
    if (oracle_is_prime(m)) ps.push_back(m);
  return ps;
}

// Prime-power test returning (p, k), or k = 0 if not a prime power.
inline std::pair<std::uint64_t, int> oracle_prime_power(std::uint64_t m) {
  if (m < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {m, 1};
  int k = 0;
  while (m % p == 0) m /= p, ++k;
  return m == 1 ? std::make_pair(p, k) : std::make_pair(std::uint64_t{0}, 0);
}

inline std::uint64_t random_reduced_residue(goldbach3::Rng& rng,
                                            std::uint64_t q) {
  if (q == 1) return 0;
  for (;;) {
    const std::uint64_t a = rng.below(q);
    if (std::gcd(a, q) == 1) return a;
  }
}

inline goldbach3::Constraint random_constraint(goldbach3::Rng& rng,
                                               std::int64_t nmax,
                                               std::uint64_t qmax) {
  goldbach3::Constraint c;
  c.n = static_cast<std::int64_t>(rng.between(7, static_cast<std::uint64_t>(nmax)));
  for (int j = 0; j < 3; ++j) {
    c.q[j] = rng.between(1, qmax);
    c.a[j] = random_reduced_residue(rng, c.q[j]);
  }
  return c;
}

}  // namespace testsupport
