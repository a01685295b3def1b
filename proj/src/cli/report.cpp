#include "eightfold/cli/report.hpp"

namespace eightfold {

nlohmann::json to_json(const ClaimReport& r) {
  nlohmann::json j;
  j["claim_id"] = r.claim_id;
  j["status"] = r.status;
  j["expected"] = r.expected;
  j["observed"] = r.observed;
  j["paper_citation"] = r.citation;
  j["seed"] = r.seed;
  j["primes"] = r.primes;
  j["runtime_ms"] = r.runtime_ms;
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

bool matches_expected(const nlohmann::json& expected, const nlohmann::json& observed) {
  if (!expected.is_object()) return expected == observed;
  if (!observed.is_object()) return false;
  for (const auto& [key, value] : expected.items()) {
    if (!observed.contains(key) || !matches_expected(value, observed[key])) return false;
  }
  return true;
}

}  // namespace eightfold
