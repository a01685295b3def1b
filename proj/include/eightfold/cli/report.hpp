#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace eightfold {

struct RunConfig {
  std::uint64_t seed = 1;
  std::vector<std::uint32_t> primes;
  /// Overrides the trial count of sampling claims.
  std::optional<int> trials;
  std::filesystem::path cache_dir = "eightfold-cache";
};

struct ClaimReport {
  std::string claim_id;
  std::string status;  // pass, fail or skip
  nlohmann::json expected;
  nlohmann::json observed;
  std::string citation;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> primes;
  long long runtime_ms = 0;
  std::vector<std::string> warnings;
};

nlohmann::json to_json(const ClaimReport& r);

/// Every key of `expected` is present in `observed` with an equal value.
bool matches_expected(const nlohmann::json& expected, const nlohmann::json& observed);

}  // namespace eightfold
