#pragma once

// JSON emitters for the structured result types.

#include <json.hpp>

#include "goldbach3/singular.hpp"

namespace goldbach3 {

inline nlohmann::ordered_json prime_case_json(const PrimeCase& pc) {
  nlohmann::ordered_json j;
  j["p"] = pc.p;
  j["label"] = to_string(pc.label);
  if (pc.witness_j >= 0) j["witness_j"] = pc.witness_j + 1;  // 1-based slots
  if (pc.witness_k >= 0) j["witness_k"] = pc.witness_k + 1;
  j["factor"] = pc.factor;
  return j;
}

inline nlohmann::ordered_json singular_series_json(const SingularSeriesValue& v) {
  nlohmann::ordered_json j;
  j["lower"] = v.lower;
  j["upper"] = v.upper;
  j["finite_part"] = v.finite_part;
  j["pmax"] = v.pmax;
  if (v.zero_reason) {
    std::string reason = to_string(*v.zero_reason);
    if (*v.zero_reason == ZeroReason::ECase ||
        *v.zero_reason == ZeroReason::P2Vanishing)
      reason += "(p=" + std::to_string(v.zero_prime) + ")";
    j["zero_reason"] = reason;
  } else {
    j["zero_reason"] = nullptr;
  }
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& pc : v.cases) j["cases"].push_back(prime_case_json(pc));
  return j;
}

}  // namespace goldbach3
