#pragma once

// Shared error types, tolerances and small utilities.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace goldbach3 {

inline constexpr const char* kVersion = "0.1.0";

// Error hierarchy. The CLI maps these onto exit codes:
//   validation_error / out_of_range_error -> 2
//   impossible_error                      -> 3
//   capacity_error                        -> 4
class error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments: reduced-residue preconditions, malformed ranges, ...
class validation_error : public error {
  using error::error;
};

// Query outside a frozen table's range.
class out_of_range_error : public error {
  using error::error;
};

// Request that no computation can satisfy (even n, aliasing grids, ...).
class impossible_error : public error {
  using error::error;
};

// Request exceeding a configured resource ceiling.
class capacity_error : public error {
  using error::error;
};

// |a - b| <= tol * max(1, |ref|); ref defaults to b. This floor-at-1
// convention is used throughout for quantities that may legitimately be 0.
inline bool near(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

// Deterministic RNG used by every seeded scan or sampling policy.
// Modulo reduction is deliberate: bit-for-bit reproducibility matters more
// here than uniformity at the 2^-64 level.
struct Rng {
  std::mt19937_64 gen;

  explicit Rng(std::uint64_t seed) : gen(seed) {}

  std::uint64_t next() { return gen(); }

  // Uniform-ish value in [0, n).
  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : gen() % n; }

  // Uniform-ish value in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  double real01() {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
  }
};

// FNV-1a, for deriving per-cell seeds from a user seed plus coordinates.
inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace goldbach3
