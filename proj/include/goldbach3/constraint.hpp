#pragma once

// The problem instance: target n plus three residue/modulus pairs.

#include <array>
#include <cstdint>
#include <numeric>
#include <string>

#include "goldbach3/common.hpp"

namespace goldbach3 {

struct Constraint {
  std::int64_t n = 0;
  std::array<std::uint64_t, 3> q{1, 1, 1};
  std::array<std::uint64_t, 3> a{0, 0, 0};

  static Constraint make(std::int64_t n, std::uint64_t q1, std::uint64_t a1,
                         std::uint64_t q2, std::uint64_t a2, std::uint64_t q3,
                         std::uint64_t a3) {
    return Constraint{n, {q1, q2, q3}, {a1, a2, a3}};
  }

  // 1-based index of the first invalid pair, 0 if all valid.
  int first_invalid_pair() const {
    for (int i = 0; i < 3; ++i) {
      if (q[i] < 1) return i + 1;
      if (a[i] >= q[i]) return i + 1;
      if (std::gcd(a[i], q[i]) != 1) return i + 1;
    }
    return 0;
  }

  void validate() const {
    if (n < 1) throw validation_error("constraint: n must be positive");
    if (const int i = first_invalid_pair(); i != 0)
      throw validation_error("constraint: pair " + std::to_string(i) +
                             " (a" + std::to_string(i) + "=" +
                             std::to_string(a[i - 1]) + ", q" +
                             std::to_string(i) + "=" +
                             std::to_string(q[i - 1]) +
                             ") is not a reduced residue: gcd(a, q) != 1");
  }

  std::uint64_t moduli_gcd() const { return std::gcd(std::gcd(q[0], q[1]), q[2]); }

  bool operator==(const Constraint&) const = default;
};

}  // namespace goldbach3
