#pragma once

// Case classification, the singular series S3(n) as an interval-valued Euler
// product, admissibility predicates, and the constructive residue builders.
//
// Local Euler factors, writing the classes a prime p can land in:
//   finite part: p | (q1,q2,q3), factor p^v with p^v || (q1,q2,q3)
//   (A) p coprime to every q_j, p | n            factor 1 - 1/(p-1)^2
//   (B) p coprime to every q_j, p not | n        factor 1 + 1/(p-1)^3
//   (C) p | q_j alone, p | n - a_j               factor 1 + 1/(p-1)
//   (D) p | q_j alone, p not | n - a_j           factor 1 - 1/(p-1)^2
//   (E) p | (q_j,q_k), p not | q_l, p | n-(a_j+a_k)     factor 0
//   (F) p | (q_j,q_k), p not | q_l, p not | n-(a_j+a_k) factor 1 + 1/(p-1)
//
// S3 = 0 exactly when the compatibility congruence fails, some prime lands
// in (E), or p = 2 lands in (A) or (D) (its factor 1 - 1/(2-1)^2 is 0).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "goldbach3/arith.hpp"
#include "goldbach3/common.hpp"
#include "goldbach3/constraint.hpp"
#include "goldbach3/ramanujan.hpp"

namespace goldbach3 {

inline constexpr std::uint64_t kDefaultPrimeBound = 100'000;

enum class CaseLabel { FinitePart, A, B, C, D, E, F };

inline const char* to_string(CaseLabel l) {
  switch (l) {
    case CaseLabel::FinitePart: return "FINITE_PART";
    case CaseLabel::A: return "A";
    case CaseLabel::B: return "B";
    case CaseLabel::C: return "C";
    case CaseLabel::D: return "D";
    case CaseLabel::E: return "E";
    case CaseLabel::F: return "F";
  }
  return "?";
}

struct PrimeCase {
  std::uint64_t p = 0;
  CaseLabel label = CaseLabel::B;
  // 0-based indices of the moduli that triggered the label; -1 when unused.
  int witness_j = -1;
  int witness_k = -1;
  double factor = 1.0;
};

// n = a1 + a2 + a3 mod (q1, q2, q3); necessary for any representation.
inline bool general_condition(const Constraint& c) {
  const std::uint64_t g = c.moduli_gcd();
  return mod_i64(static_cast<std::int64_t>(c.a[0] + c.a[1] + c.a[2]) - c.n, g) == 0;
}

inline PrimeCase classify_prime(std::uint64_t p, const Constraint& c) {
  if (!is_prime_u64(p)) throw validation_error("classify_prime: p must be prime");
  PrimeCase pc;
  pc.p = p;
  int divisible = 0, dj = -1, dk = -1, coprime_l = -1;
  for (int j = 0; j < 3; ++j) {
    if (c.q[j] % p == 0) {
      if (divisible == 0) dj = j;
      else if (divisible == 1) dk = j;
      ++divisible;
    } else {
      coprime_l = j;
    }
  }
  const double pm1 = static_cast<double>(p - 1);
  if (divisible == 3) {
    pc.label = CaseLabel::FinitePart;
    pc.factor = static_cast<double>(pow_u64(p, valuation(c.moduli_gcd(), p)));
    return pc;
  }
  if (divisible == 0) {
    if (mod_i64(c.n, p) == 0) {
      pc.label = CaseLabel::A;
      pc.factor = 1.0 - 1.0 / (pm1 * pm1);
    } else {
      pc.label = CaseLabel::B;
      pc.factor = 1.0 + 1.0 / (pm1 * pm1 * pm1);
    }
    return pc;
  }
  if (divisible == 1) {
    pc.witness_j = dj;
    if (mod_i64(c.n - static_cast<std::int64_t>(c.a[dj]), p) == 0) {
      pc.label = CaseLabel::C;
      pc.factor = 1.0 + 1.0 / pm1;
    } else {
      pc.label = CaseLabel::D;
      pc.factor = 1.0 - 1.0 / (pm1 * pm1);
    }
    return pc;
  }
  pc.witness_j = dj;
  pc.witness_k = dk;
  (void)coprime_l;
  if (mod_i64(c.n - static_cast<std::int64_t>(c.a[dj] + c.a[dk]), p) == 0) {
    pc.label = CaseLabel::E;
    pc.factor = 0.0;  // 1 + lambda(p) = 0
  } else {
    pc.label = CaseLabel::F;
    pc.factor = 1.0 + 1.0 / pm1;
  }
  return pc;
}

enum class ZeroReason { GeneralConditionFailed, ECase, P2Vanishing };

inline const char* to_string(ZeroReason r) {
  switch (r) {
    case ZeroReason::GeneralConditionFailed: return "GENERAL_CONDITION_FAILED";
    case ZeroReason::ECase: return "E_CASE";
    case ZeroReason::P2Vanishing: return "P2_VANISHING";
  }
  return "?";
}

struct SingularSeriesValue {
  double lower = 0.0;
  double upper = 0.0;
  double finite_part = 0.0;
  std::uint64_t pmax = 0;
  std::optional<ZeroReason> zero_reason;
  std::uint64_t zero_prime = 0;  // the prime behind ECase / P2Vanishing
  std::vector<PrimeCase> cases;

  bool is_zero() const { return zero_reason.has_value(); }
  double midpoint() const { return 0.5 * (lower + upper); }
};

namespace detail {

// Sorted union of the prime factors of |n|, q1, q2, q3.
inline std::vector<std::uint64_t> special_primes(const Constraint& c) {
  std::set<std::uint64_t> ps;
  for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(std::abs(c.n))))
    ps.insert(p);
  for (int j = 0; j < 3; ++j)
    for (const auto& [p, e] : factorize(c.q[j])) ps.insert(p);
  return {ps.begin(), ps.end()};
}

inline std::vector<std::uint32_t> primes_upto(std::uint64_t n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

}  // namespace detail

// Euler product over a rigorous enclosure:
//   exact factors for every prime dividing n q1 q2 q3,
//   the (B)-class product over remaining p <= pmax,
//   tail enclosed by [1, exp(sum_{m > pmax} 1/(m-1)^3)] with the elementary
//   bound sum_{m > pmax} 1/(m-1)^3 < 1/(2 (pmax-1)^2).
inline SingularSeriesValue singular_series(const Constraint& c,
                                           std::uint64_t pmax = kDefaultPrimeBound) {
  c.validate();
  if (pmax < 3) throw validation_error("singular_series: pmax must be >= 3");
  SingularSeriesValue out;
  out.pmax = pmax;
  if (!general_condition(c)) {
    out.zero_reason = ZeroReason::GeneralConditionFailed;
    return out;
  }
  const auto special = detail::special_primes(c);
  double finite = 1.0;
  for (const std::uint64_t p : special) {
    const PrimeCase pc = classify_prime(p, c);
    out.cases.push_back(pc);
    if (pc.label == CaseLabel::E) {
      out.zero_reason = ZeroReason::ECase;
      out.zero_prime = p;
      return out;
    }
    if (p == 2 && (pc.label == CaseLabel::A || pc.label == CaseLabel::D)) {
      out.zero_reason = ZeroReason::P2Vanishing;
      out.zero_prime = 2;
      return out;
    }
    finite *= pc.factor;
  }
  out.finite_part = finite;
  double prod = finite;
  for (const std::uint32_t p : detail::primes_upto(pmax)) {
    if (std::binary_search(special.begin(), special.end(),
                           static_cast<std::uint64_t>(p)))
      continue;
    const double pm1 = static_cast<double>(p - 1);
    prod *= 1.0 + 1.0 / (pm1 * pm1 * pm1);
  }
  const double pb = static_cast<double>(pmax - 1);
  const double tail = 1.0 / (2.0 * pb * pb);
  out.lower = prod;
  out.upper = prod * std::exp(tail);
  return out;
}

// Partial sums of the lambda series; refuses (nullopt) when the series is
// defined to be 0 because the compatibility congruence fails.
inline std::optional<double> series_partial_sum(const Constraint& c,
                                                std::uint64_t Q) {
  c.validate();
  if (Q < 1) throw validation_error("series_partial_sum: Q must be >= 1");
  if (!general_condition(c)) return std::nullopt;
  double sum = 0.0;
  for (std::uint64_t q = 1; q <= Q; ++q) sum += lambda_coeff(q, c);
  return sum;
}

struct AdmissibilityVerdict {
  bool admissible = false;
  enum class Why {
    Admissible,
    ResidueNotReduced,
    GeneralConditionFailed,
    VanishingE,
    VanishingP2,
  } why = Why::Admissible;
  int pair_index = 0;      // 1-based, for ResidueNotReduced
  std::uint64_t prime = 0; // for the vanishing reasons

  std::string describe() const {
    switch (why) {
      case Why::Admissible: return "admissible";
      case Why::ResidueNotReduced:
        return "gcd(a" + std::to_string(pair_index) + ", q" +
               std::to_string(pair_index) + ") != 1";
      case Why::GeneralConditionFailed:
        return "n != a1+a2+a3 mod (q1,q2,q3)";
      case Why::VanishingE:
        return "case E at p=" + std::to_string(prime);
      case Why::VanishingP2:
        return "vanishing factor at p=2 (case " +
               std::string(pair_index == 0 ? "A" : "D") + ")";
    }
    return "?";
  }
};

// True iff S3(n) > 0: gcd conditions, the compatibility congruence, no (E)
// prime, and p = 2 not landing in (A) or (D).
inline AdmissibilityVerdict is_admissible(const Constraint& c) {
  if (c.n < 1) throw validation_error("is_admissible: n must be positive");
  AdmissibilityVerdict v;
  if (const int i = c.first_invalid_pair(); i != 0) {
    v.why = AdmissibilityVerdict::Why::ResidueNotReduced;
    v.pair_index = i;
    return v;
  }
  if (!general_condition(c)) {
    v.why = AdmissibilityVerdict::Why::GeneralConditionFailed;
    return v;
  }
  for (const std::uint64_t p : detail::special_primes(c)) {
    const PrimeCase pc = classify_prime(p, c);
    if (pc.label == CaseLabel::E) {
      v.why = AdmissibilityVerdict::Why::VanishingE;
      v.prime = p;
      return v;
    }
    if (p == 2 && (pc.label == CaseLabel::A || pc.label == CaseLabel::D)) {
      v.why = AdmissibilityVerdict::Why::VanishingP2;
      v.prime = 2;
      v.pair_index = pc.label == CaseLabel::D ? 1 : 0;  // 0 = A, 1 = D
      return v;
    }
  }
  v.admissible = true;
  return v;
}

namespace detail {

// Smallest h in [1, p-1] with base + h != 0 mod p.
inline std::uint64_t smallest_shift(std::int64_t base, std::uint64_t p) {
  for (std::uint64_t h = 1; h < p; ++h)
    if (mod_i64(base + static_cast<std::int64_t>(h), p) != 0) return h;
  throw error("smallest_shift: no valid shift (even n slipped through?)");
}

// Smallest t in [0, q) with t = r mod M and gcd(t, q) = 1; M must divide
// the radical structure of q so a solution always exists.
inline std::uint64_t smallest_coprime_lift(std::uint64_t r, std::uint64_t M,
                                           std::uint64_t q) {
  if (q == 1) return 0;
  for (std::uint64_t t = r; t < q; t += M)
    if (std::gcd(t, q) == 1) return t;
  throw error("smallest_coprime_lift: no coprime lift below the modulus");
}

}  // namespace detail

// Builds a2 with gcd(a2, q2) = 1 and n != a2 + a3 mod p for every prime
// p | (q2, q3). Deterministic: smallest valid shift per prime, then the
// smallest CRT lift coprime to q2. Refuses for even n (no admissible
// residue exists).
inline std::uint64_t construct_a2(std::int64_t n, std::uint64_t q3,
                                  std::uint64_t a3, std::uint64_t q2) {
  if (n < 1 || q3 < 1 || q2 < 1)
    throw validation_error("construct_a2: n and moduli must be positive");
  if (a3 >= q3 || std::gcd(a3, q3) != 1)
    throw validation_error("construct_a2: gcd(a3, q3) != 1");
  if (n % 2 == 0)
    throw impossible_error(
        "construct_a2: no admissible residue exists for even n");
  CongruenceSystem sys;
  const std::uint64_t g = std::gcd(q2, q3);
  for (const auto& [p, e] : factorize(g)) {
    const std::uint64_t h =
        detail::smallest_shift(n - static_cast<std::int64_t>(a3), p);
    sys.add(mod_i64(n - static_cast<std::int64_t>(a3) +
                        static_cast<std::int64_t>(h),
                    p),
            p);
  }
  const CrtResult crt = crt_solve(sys);
  return detail::smallest_coprime_lift(crt.residue, crt.modulus, q2);
}

// Builds a1 with gcd(a1, q1) = 1 such that
//   (1) n = a1 + a2 + a3 mod (q1, q2, q3),
//   (2) n != a1 + a2 mod p for p | (q1, q2), p not | q3,
//   (3) n != a1 + a3 mod p for p | (q1, q3), p not | q2.
// Requires a2 to satisfy n != a2 + a3 mod p for every p | (q2, q3)
// (construct_a2 guarantees this); otherwise refuses naming the prime.
inline std::uint64_t construct_a1(std::int64_t n, std::uint64_t q3,
                                  std::uint64_t a3, std::uint64_t q2,
                                  std::uint64_t a2, std::uint64_t q1) {
  if (n < 1 || q1 < 1 || q2 < 1 || q3 < 1)
    throw validation_error("construct_a1: n and moduli must be positive");
  if (a3 >= q3 || std::gcd(a3, q3) != 1)
    throw validation_error("construct_a1: gcd(a3, q3) != 1");
  if (a2 >= q2 || std::gcd(a2, q2) != 1)
    throw validation_error("construct_a1: gcd(a2, q2) != 1");
  if (n % 2 == 0)
    throw impossible_error(
        "construct_a1: no admissible residue exists for even n");
  for (const auto& [p, e] : factorize(std::gcd(q2, q3))) {
    if (mod_i64(n - static_cast<std::int64_t>(a2 + a3), p) == 0)
      throw impossible_error(
          "construct_a1: a2 violates n != a2 + a3 at prime p=" +
          std::to_string(p));
  }
  CongruenceSystem sys;
  const std::uint64_t g = std::gcd(std::gcd(q1, q2), q3);
  if (g > 1)
    sys.add(mod_i64(n - static_cast<std::int64_t>(a2 + a3), g), g);
  for (const auto& [p, e] : factorize(std::gcd(q1, q3))) {
    if (q2 % p == 0) continue;
    const std::uint64_t k =
        detail::smallest_shift(n - static_cast<std::int64_t>(a3), p);
    sys.add(mod_i64(n - static_cast<std::int64_t>(a3) +
                        static_cast<std::int64_t>(k),
                    p),
            p);
  }
  for (const auto& [p, e] : factorize(std::gcd(q1, q2))) {
    if (q3 % p == 0) continue;
    const std::uint64_t l =
        detail::smallest_shift(n - static_cast<std::int64_t>(a2), p);
    sys.add(mod_i64(n - static_cast<std::int64_t>(a2) +
                        static_cast<std::int64_t>(l),
                    p),
            p);
  }
  const CrtResult crt = crt_solve(sys);
  return detail::smallest_coprime_lift(crt.residue, crt.modulus, q1);
}

}  // namespace goldbach3
