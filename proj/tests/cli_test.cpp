#include <gtest/gtest.h>

#include <fstream>

#include "eightfold/cli/claims.hpp"

using namespace eightfold;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("eightfold-cli-test-" + name);
  fs::remove_all(dir);
  return dir;
}

RunConfig config_for(const fs::path& dir) {
  RunConfig c;
  c.cache_dir = dir;
  return c;
}

nlohmann::json without_runtime(const std::vector<ClaimReport>& reports) {
  auto out = nlohmann::json::array();
  for (const auto& r : reports) {
    auto j = to_json(r);
    j.erase("runtime_ms");
    out.push_back(j);
  }
  return out;
}

}  // namespace

TEST(Registry, SortedWithCitations) {
  const auto& reg = claim_registry();
  EXPECT_EQ(reg.size(), 18u);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    EXPECT_FALSE(reg[i].citation.empty()) << reg[i].id;
    if (i > 0) EXPECT_LT(reg[i - 1].id, reg[i].id);
  }
  EXPECT_NE(find_claim("M8-BETTI"), nullptr);
  EXPECT_EQ(find_claim("NO-SUCH"), nullptr);
}

TEST(Report, SubsetMatch) {
  const nlohmann::json observed = {{"a", 1}, {"b", {{"c", 2}, {"d", 3}}}};
  EXPECT_TRUE(matches_expected({{"a", 1}}, observed));
  EXPECT_TRUE(matches_expected({{"b", {{"c", 2}}}}, observed));
  EXPECT_FALSE(matches_expected({{"b", {{"c", 3}}}}, observed));
  EXPECT_FALSE(matches_expected({{"e", 1}}, observed));
  EXPECT_FALSE(matches_expected({{"a", {1}}}, observed));
}

TEST(Report, JsonFields) {
  ClaimReport r;
  r.claim_id = "X";
  r.status = "pass";
  r.seed = 4;
  r.primes = {5, 7};
  const auto j = to_json(r);
  for (const char* key : {"claim_id", "status", "expected", "observed", "paper_citation", "seed", "primes", "runtime_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_FALSE(j.contains("warnings"));
}

TEST(Cache, BuildShowClean) {
  const auto dir = fresh_dir("build");
  ArtifactCache cache(dir, 1);
  cache.build();
  const auto entries = cache.show();
  ASSERT_EQ(entries.size(), 3u);
  for (const auto& e : entries) {
    EXPECT_TRUE(e.intact) << e.name;
    EXPECT_EQ(e.sha256.size(), 64u);
    EXPECT_FALSE(e.provenance.empty());
    EXPECT_TRUE(fs::exists(dir / e.name));
  }
  EXPECT_EQ(cache.binding().consistent, 16u);
  EXPECT_EQ(cache.cubic().degree(), 3);
  EXPECT_EQ(cache.quintic().degree(), 5);

  ArtifactCache reopened(dir, 1);
  EXPECT_EQ(reopened.show().size(), 3u);
  EXPECT_EQ(reopened.cubic(), cache.cubic());
  EXPECT_TRUE(reopened.warnings("cubic.poly").empty());

  reopened.clean();
  EXPECT_TRUE(reopened.show().empty());
  for (const auto& name : ArtifactCache::artifact_names()) EXPECT_FALSE(fs::exists(dir / name));
  fs::remove_all(dir);
}

TEST(Cache, Sha256KnownValue) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cache, TamperedCubicIsRebuiltWithWarning) {
  const auto dir = fresh_dir("tamper");
  SparsePolynomial original;
  {
    ArtifactCache cache(dir, 1);
    original = cache.cubic();
  }
  {
    std::ofstream out(dir / "cubic.poly", std::ios::app);
    out << "# edited\n";
  }
  ArtifactCache cache(dir, 1);
  EXPECT_FALSE(cache.show().front().intact);
  EXPECT_EQ(cache.cubic(), original);
  ASSERT_EQ(cache.warnings("cubic.poly").size(), 1u);
  EXPECT_NE(cache.warnings("cubic.poly").front().find("checksum mismatch"), std::string::npos);

  const auto reports = run_claims({"M8-SYZ"}, config_for(dir));
  EXPECT_TRUE(reports.front().warnings.empty());
  fs::remove_all(dir);
}

TEST(Cache, TamperWarningReachesReport) {
  const auto dir = fresh_dir("tamper-report");
  run_claims({"M8-SYZ"}, config_for(dir));
  {
    std::ofstream out(dir / "cubic.poly", std::ios::trunc);
    out << "not a polynomial\n";
  }
  const auto reports = run_claims({"M8-SYZ"}, config_for(dir));
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].status, "pass");
  ASSERT_EQ(reports[0].warnings.size(), 1u);
  EXPECT_TRUE(to_json(reports[0]).contains("warnings"));
  fs::remove_all(dir);
}

TEST(Cache, SwappedBindingIsRejected) {
  const auto dir = fresh_dir("binding");
  {
    ArtifactCache cache(dir, 1);
    cache.binding();
  }
  auto j = nlohmann::json::parse(std::ifstream(dir / "kempe_binding.json"));
  std::swap(j["matchings"]["X1"], j["matchings"]["X2"]);
  const auto text = j.dump(2) + "\n";
  std::ofstream(dir / "kempe_binding.json", std::ios::trunc) << text;
  auto manifest = nlohmann::json::parse(std::ifstream(dir / "manifest.json"));
  manifest["kempe_binding.json"]["sha256"] = sha256_hex(text);
  std::ofstream(dir / "manifest.json", std::ios::trunc) << manifest.dump(2);

  ArtifactCache cache(dir, 1);
  EXPECT_EQ(describe(cache.binding()).front(), std::make_pair(std::string("X1"), std::string("1-2 3-4 5-6 7-8")));
  ASSERT_EQ(cache.warnings("kempe_binding.json").size(), 1u);
  EXPECT_NE(cache.warnings("kempe_binding.json").front().find("failed to load"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Run, UnknownClaimThrows) {
  EXPECT_THROW(run_claims({"NO-SUCH"}, config_for(fresh_dir("unknown"))), std::invalid_argument);
}

TEST(Run, QuickClaimsPassAndAreDeterministic) {
  const std::vector<std::string> ids{"TAB-SSYT", "M8-BETTI", "M8-HILB", "M8-CUBIC-SKEW", "M8-SING", "N8-SECANT-ID"};
  const auto dir = fresh_dir("run");
  auto c = config_for(dir);
  c.trials = 20;
  const auto first = run_claims(ids, c, 1);
  const auto second = run_claims(ids, c, 3);
  ASSERT_EQ(first.size(), ids.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].status, "pass") << first[i].claim_id << " " << first[i].observed.dump();
    if (i > 0) EXPECT_LT(first[i - 1].claim_id, first[i].claim_id);
  }
  EXPECT_EQ(without_runtime(first).dump(), without_runtime(second).dump());
  EXPECT_EQ(first[3].observed["configurations"], 20);
  fs::remove_all(dir);
}

TEST(Run, BettiMiddleRow) {
  const auto dir = fresh_dir("betti");
  const auto r = run_claims({"M8-BETTI"}, config_for(dir)).front();
  EXPECT_EQ(r.status, "pass");
  const auto& e = r.observed["entries"];
  EXPECT_EQ(e["2,2"], "175");
  EXPECT_EQ(e["3,2"], "512");
  EXPECT_EQ(e["4,2"], "700");
  EXPECT_EQ(e["5,2"], "512");
  EXPECT_EQ(e["6,2"], "175");
  fs::remove_all(dir);
}

TEST(Run, CleanCacheIsRebuiltTransparently) {
  const auto dir = fresh_dir("clean");
  ArtifactCache(dir, 1).clean();
  const auto r = run_claims({"M8-CUBIC-AVG"}, config_for(dir)).front();
  EXPECT_EQ(r.status, "pass");
  EXPECT_TRUE(r.warnings.empty());
  EXPECT_TRUE(fs::exists(dir / "cubic.poly"));
  fs::remove_all(dir);
}
