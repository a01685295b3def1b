#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eightfold/cli/claims.hpp"
#include "eightfold/exactcore/modular.hpp"

using namespace eightfold;

namespace {

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const auto p = std::stoull(item, &used);
    if (used != item.size() || p < 3 || p > 0xFFFFFFFFull) throw CLI::ValidationError("--prime", "bad prime " + item);
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw CLI::ValidationError("--prime", item + " is not prime");
    }
    out.push_back(static_cast<std::uint32_t>(p));
  }
  if (out.size() != 2) throw CLI::ValidationError("--prime", "expected two primes p1,p2");
  return out;
}

void print_registry() {
  for (const auto& c : claim_registry()) std::cout << c.id << "\t" << c.citation << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of invariant-theory claims for eight points"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::uint64_t seed = 1;
  std::string prime_text;
  std::optional<int> trials;
  std::string out_path;
  std::string cache_dir = "eightfold-cache";
  bool list = false;
  int jobs = 1;

  app.add_option("--seed", seed, "Master seed")->capture_default_str();
  app.add_option("--prime", prime_text, "Two primes p1,p2 for modular ranks (default 2147483647,2147483629)");
  app.add_option("--trials", trials, "Trial count for the sampling claims (defaults 100, 50, 100)")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write the JSON report here instead of standard output");
  app.add_option("--cache", cache_dir, "Artifact cache directory")->capture_default_str();
  app.add_flag("--list", list, "Print the claim registry with citations");
  app.add_option("--jobs", jobs, "Claims run concurrently")->capture_default_str()->check(CLI::PositiveNumber);

  auto* run = app.add_subcommand("run", "Run claims by id, or all");
  std::vector<std::string> ids;
  run->add_option("claims", ids, "Claim ids or 'all'")->required();

  auto* cache_cmd = app.add_subcommand("cache", "Manage cached artifacts");
  std::string action;
  cache_cmd->add_option("action", action, "build, clean or show")->required()->check(CLI::IsMember({"build", "clean", "show"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list) {
    print_registry();
    return 0;
  }

  RunConfig config;
  config.seed = seed;
  config.trials = trials;
  config.cache_dir = cache_dir;
  try {
    config.primes = prime_text.empty() ? default_primes() : parse_primes(prime_text);
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (*cache_cmd) {
    try {
      ArtifactCache cache(config.cache_dir, config.seed);
      if (action == "build") cache.build();
      if (action == "clean") cache.clean();
      if (action == "show") {
        for (const auto& e : cache.show()) {
          std::cout << e.name << "  sha256 " << e.sha256 << "  " << e.bytes << " bytes  "
                    << (e.intact ? "ok" : "MODIFIED") << "\n  " << e.provenance << "\n";
        }
      }
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return 1;
    }
    return 0;
  }

  if (!*run) {
    std::cout << app.help();
    return 2;
  }

  if (ids.size() == 1 && ids.front() == "all") {
    ids.clear();
    for (const auto& c : claim_registry()) ids.push_back(c.id);
  }
  for (const auto& id : ids) {
    if (!find_claim(id)) {
      std::cerr << "usage error: unknown claim id " << id << " (see --list)\n";
      return 2;
    }
  }

  std::vector<ClaimReport> reports;
  try {
    reports = run_claims(ids, config, jobs);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  nlohmann::json array = nlohmann::json::array();
  bool all_pass = true;
  for (const auto& r : reports) {
    array.push_back(to_json(r));
    all_pass = all_pass && r.status == "pass";
    std::cerr << r.status << "  " << r.claim_id << "  " << r.runtime_ms << " ms\n";
    for (const auto& w : r.warnings) std::cerr << "  warning: " << w << "\n";
  }
  const auto text = array.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!(out << text)) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
  }
  return all_pass ? 0 : 1;
}
