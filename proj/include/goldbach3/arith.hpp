#pragma once

// Sieved arithmetic tables (von Mangoldt, Moebius, Euler phi, smallest prime
// factor) plus the table-free modular utilities every other component uses.
//
// Tables are built single-threaded, then frozen; all accessors are const and
// safe to share across concurrent workers.

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "goldbach3/common.hpp"

namespace goldbach3 {

// Default ceiling on table size; build_tables refuses larger N.
inline constexpr std::uint64_t kDefaultTableCeiling = 100'000'000;

class MangoldtTable {
 public:
  MangoldtTable() = default;

  std::uint64_t limit() const { return limit_; }

  // Lambda(m): log p when m = p^k, else 0.
  double lambda(std::uint64_t m) const {
    check(m);
    return lambda_[m];
  }

  int mu(std::uint64_t m) const {
    check(m);
    return mu_[m];
  }

  std::uint64_t phi(std::uint64_t m) const {
    check(m);
    return phi_[m];
  }

  std::uint32_t smallest_prime_factor(std::uint64_t m) const {
    check(m);
    return spf_[m];
  }

  // 0 when m is not a prime power, otherwise k with m = p^k.
  int prime_power_exponent(std::uint64_t m) const {
    check(m);
    return ppexp_[m];
  }

  bool is_prime(std::uint64_t m) const {
    check(m);
    return m >= 2 && spf_[m] == m;
  }

  bool is_prime_power(std::uint64_t m) const {
    check(m);
    return ppexp_[m] != 0;
  }

  const std::vector<std::uint32_t>& primes() const { return primes_; }
  const std::vector<std::uint32_t>& spf_raw() const { return spf_; }

  // Rebuilds every derived array from a smallest-prime-factor table.
  // Shared by the sieve builder and the cache loader.
  static MangoldtTable from_spf(std::vector<std::uint32_t> spf) {
    MangoldtTable t;
    const std::uint64_t n = spf.size() - 1;
    t.limit_ = n;
    t.spf_ = std::move(spf);
    t.mu_.assign(n + 1, 0);
    t.phi_.assign(n + 1, 0);
    t.ppexp_.assign(n + 1, 0);
    t.lambda_.assign(n + 1, 0.0);
    if (n >= 1) {
      t.mu_[1] = 1;
      t.phi_[1] = 1;
    }
    for (std::uint64_t m = 2; m <= n; ++m) {
      const std::uint32_t p = t.spf_[m];
      const std::uint64_t d = m / p;
      if (t.spf_[d] == p) {
        t.phi_[m] = t.phi_[d] * p;
        t.mu_[m] = 0;
      } else {
        t.phi_[m] = t.phi_[d] * (p - 1);
        t.mu_[m] = static_cast<std::int8_t>(-t.mu_[d]);
      }
      if (d == 1) {
        t.ppexp_[m] = 1;
        t.lambda_[m] = std::log(static_cast<double>(p));
        t.primes_.push_back(static_cast<std::uint32_t>(m));
      } else if (t.ppexp_[d] != 0 && t.spf_[d] == p) {
        t.ppexp_[m] = static_cast<std::uint8_t>(t.ppexp_[d] + 1);
        t.lambda_[m] = t.lambda_[d];
      }
    }
    return t;
  }

 private:
  void check(std::uint64_t m) const {
    if (m < 1 || m > limit_)
      throw out_of_range_error("table lookup at m=" + std::to_string(m) +
                               " outside [1, " + std::to_string(limit_) + "]");
  }

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint32_t> phi_;
  std::vector<std::uint8_t> ppexp_;
  std::vector<double> lambda_;
  std::vector<std::uint32_t> primes_;
};

// Linear sieve: spf[m] for all m <= N, O(N).
inline MangoldtTable build_tables(std::uint64_t N,
                                  std::uint64_t ceiling = kDefaultTableCeiling) {
  if (N < 2) throw validation_error("build_tables: N must be >= 2");
  if (N > ceiling)
    throw capacity_error("build_tables: N=" + std::to_string(N) +
                         " exceeds table ceiling " + std::to_string(ceiling));
  std::vector<std::uint32_t> spf(N + 1, 0);
  spf[1] = 1;
  std::vector<std::uint32_t> primes;
  primes.reserve(static_cast<std::size_t>(1.3 * N / std::max(1.0, std::log(double(N)))) + 16);
  for (std::uint64_t m = 2; m <= N; ++m) {
    if (spf[m] == 0) {
      spf[m] = static_cast<std::uint32_t>(m);
      primes.push_back(static_cast<std::uint32_t>(m));
    }
    for (std::uint32_t p : primes) {
      if (p > spf[m] || p * m > N) break;
      spf[p * m] = p;
    }
  }
  return MangoldtTable::from_spf(std::move(spf));
}

// ---------------------------------------------------------------------------
// Table-free helpers (trial division). Used wherever arguments may exceed the
// frozen table, e.g. lcm moduli inside the lambda coefficients.
// ---------------------------------------------------------------------------

using Factorization = std::vector<std::pair<std::uint64_t, int>>;

inline Factorization factorize(std::uint64_t m) {
  Factorization f;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) m /= p, ++e;
      f.emplace_back(p, e);
    }
  }
  // 6k +- 1 wheel
  static constexpr std::uint64_t inc[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t p = 7;
  int i = 0;
  while (p * p <= m) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) m /= p, ++e;
      f.emplace_back(p, e);
    }
    p += inc[i];
    i = (i + 1) & 7;
  }
  if (m > 1) f.emplace_back(m, 1);
  return f;
}

inline std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline std::uint64_t phi_of(std::uint64_t m) {
  std::uint64_t r = m;
  for (const auto& [p, e] : factorize(m)) r = r / p * (p - 1);
  return r;
}

inline int mu_of(std::uint64_t m) {
  int sign = 1;
  for (const auto& [p, e] : factorize(m)) {
    if (e >= 2) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::uint64_t tau_of(std::uint64_t m) {
  std::uint64_t r = 1;
  for (const auto& [p, e] : factorize(m)) r *= static_cast<std::uint64_t>(e + 1);
  return r;
}

inline std::uint64_t sigma_of(std::uint64_t m) {
  std::uint64_t r = 1;
  for (const auto& [p, e] : factorize(m)) {
    std::uint64_t s = 1, pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      s += pk;
    }
    r *= s;
  }
  return r;
}

inline int omega_of(std::uint64_t m) {
  return static_cast<int>(factorize(m).size());
}

inline bool is_prime_u64(std::uint64_t m) {
  if (m < 2) return false;
  const auto f = factorize(m);
  return f.size() == 1 && f[0].second == 1;
}

// p-adic valuation.
inline int valuation(std::uint64_t m, std::uint64_t p) {
  int v = 0;
  while (m != 0 && m % p == 0) m /= p, ++v;
  return v;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t g = std::gcd(a, b);
  const unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
  if (l > std::numeric_limits<std::uint64_t>::max())
    throw capacity_error("lcm overflow");
  return static_cast<std::uint64_t>(l);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

// Inverse of a mod m; requires gcd(a, m) = 1.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
  while (newr != 0) {
    const std::int64_t q = r / newr;
    std::tie(t, newt) = std::make_pair(newt, t - q * newt);
    std::tie(r, newr) = std::make_pair(newr, r - q * newr);
  }
  if (r != 1) throw validation_error("invmod: arguments not coprime");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

// Canonical residue of a signed value.
inline std::uint64_t mod_i64(std::int64_t v, std::uint64_t m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  if (r < 0) r += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r);
}

// Exact per-m values, from the frozen table's spf chain.
struct MultiplicativeValues {
  int mu = 0;
  std::uint64_t phi = 0;
  std::uint64_t tau = 0;
  std::uint64_t sigma = 0;
  int omega = 0;
};

inline MultiplicativeValues multiplicative_functions(std::uint64_t m,
                                                     const MangoldtTable& table) {
  if (m < 1 || m > table.limit())
    throw out_of_range_error("multiplicative_functions: m=" + std::to_string(m) +
                             " outside table range");
  MultiplicativeValues v;
  v.mu = table.mu(m);
  v.phi = table.phi(m);
  v.tau = 1;
  v.sigma = 1;
  v.omega = 0;
  std::uint64_t rest = m;
  while (rest > 1) {
    const std::uint64_t p = table.smallest_prime_factor(rest);
    int e = 0;
    std::uint64_t pk = 1, s = 1;
    while (rest % p == 0) {
      rest /= p;
      ++e;
      pk *= p;
      s += pk;
    }
    v.tau *= static_cast<std::uint64_t>(e + 1);
    v.sigma *= s;
    v.omega += 1;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Chinese remainder solving over arbitrary (not necessarily coprime) moduli.
// ---------------------------------------------------------------------------

struct CongruenceSystem {
  struct Congruence {
    std::uint64_t residue = 0;
    std::uint64_t modulus = 1;
  };
  std::vector<Congruence> items;

  void add(std::uint64_t residue, std::uint64_t modulus) {
    items.push_back({residue, modulus});
  }
};

struct CrtResult {
  bool compatible = true;
  std::uint64_t residue = 0;
  std::uint64_t modulus = 1;
  // When incompatible: 0-based indices of the first conflicting pair.
  std::size_t conflict_first = 0;
  std::size_t conflict_second = 0;
};

namespace detail {
inline bool pair_compatible(const CongruenceSystem::Congruence& x,
                            const CongruenceSystem::Congruence& y) {
  const std::uint64_t g = std::gcd(x.modulus, y.modulus);
  return x.residue % g == y.residue % g;
}
}  // namespace detail

// Returned residue satisfies every congruence; modulus is the lcm of the
// inputs. Incompatibility is reported, never thrown.
inline CrtResult crt_solve(const CongruenceSystem& sys) {
  CrtResult out;
  for (std::size_t j = 0; j < sys.items.size(); ++j) {
    const auto& it = sys.items[j];
    if (it.modulus < 1 || it.residue >= it.modulus)
      throw validation_error("crt_solve: entry " + std::to_string(j + 1) +
                             " has residue outside [0, modulus)");
    const std::uint64_t g = std::gcd(out.modulus, it.modulus);
    if (out.residue % g != it.residue % g) {
      // Pairwise compatibility implies global solvability, so a fold
      // conflict always traces back to some earlier single entry.
      for (std::size_t i = 0; i < j; ++i) {
        if (!detail::pair_compatible(sys.items[i], sys.items[j])) {
          return {false, 0, 0, i, j};
        }
      }
      return {false, 0, 0, j == 0 ? 0 : j - 1, j};
    }
    const std::uint64_t l = lcm_u64(out.modulus, it.modulus);
    // Solve x = out.residue + out.modulus * t = it.residue (mod it.modulus).
    const std::uint64_t m2g = it.modulus / g;
    const std::uint64_t diff =
        mod_i64(static_cast<std::int64_t>(it.residue % it.modulus) -
                    static_cast<std::int64_t>(out.residue % it.modulus),
                it.modulus) /
        g;
    const std::uint64_t t =
        m2g == 1 ? 0 : mulmod(diff % m2g, invmod((out.modulus / g) % m2g, m2g), m2g);
    const unsigned __int128 x =
        out.residue + static_cast<unsigned __int128>(out.modulus) * t;
    out.residue = static_cast<std::uint64_t>(x % l);
    out.modulus = l;
  }
  return out;
}

}  // namespace goldbach3
