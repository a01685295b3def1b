#pragma once

#include <string>
#include <vector>

#include "eightfold/cli/cache.hpp"
#include "eightfold/cli/report.hpp"

namespace eightfold {

struct ClaimInfo {
  std::string id;
  std::string citation;
  /// Cached artifacts the claim reads.
  std::vector<std::string> artifacts;
};

/// Sorted by id.
const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo* find_claim(const std::string& id);

/// Loads the needed artifacts first, then runs the claims on up to `jobs`
/// threads. Reports come back sorted by claim id.
std::vector<ClaimReport> run_claims(std::vector<std::string> ids, const RunConfig& config, int jobs = 1);

}  // namespace eightfold
