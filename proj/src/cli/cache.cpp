#include "eightfold/cli/cache.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "eightfold/n8/generators.hpp"
#include "eightfold/n8/quintic.hpp"

namespace eightfold {

namespace fs = std::filesystem;

namespace {

constexpr const char* kManifest = "manifest.json";

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + p.string());
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

std::string binding_to_json(const KempeBasis& b) {
  nlohmann::json j;
  j["direction"] = b.direction;
  j["candidates"] = b.candidates;
  j["consistent"] = b.consistent;
  for (const auto& [name, matching] : describe(b)) j["matchings"][name] = matching;
  return j.dump(2) + "\n";
}

KempeBasis binding_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<Matching> matchings;
  for (const auto& name : kempe_names()) matchings.push_back(Matching::parse(8, j.at("matchings").at(name).get<std::string>()));
  auto b = kempe_basis_from(matchings, j.at("direction").get<int>());
  b.candidates = j.at("candidates").get<std::size_t>();
  b.consistent = j.at("consistent").get<std::size_t>();
  return b;
}

const std::vector<std::string>& ArtifactCache::artifact_names() {
  static const std::vector<std::string> names{"cubic.poly", "kempe_binding.json", "quintic.poly"};
  return names;
}

ArtifactCache::ArtifactCache(fs::path dir, std::uint64_t seed) : dir_(std::move(dir)), seed_(seed) {
  manifest_ = nlohmann::json::object();
  if (const auto text = read_file(dir_ / kManifest)) {
    try {
      manifest_ = nlohmann::json::parse(*text);
    } catch (const nlohmann::json::exception&) {
      warnings_["manifest.json"].push_back("manifest.json is unreadable; artifacts will be rebuilt");
      manifest_ = nlohmann::json::object();
    }
  }
}

void ArtifactCache::save_manifest() const {
  fs::create_directories(dir_);
  write_file(dir_ / kManifest, manifest_.dump(2) + "\n");
}

void ArtifactCache::store(const std::string& name, const std::string& text, const std::string& provenance) {
  fs::create_directories(dir_);
  write_file(dir_ / name, text);
  manifest_[name] = {{"sha256", sha256_hex(text)}, {"bytes", text.size()}, {"provenance", provenance}};
  save_manifest();
}

std::string ArtifactCache::load(const std::string& name, const std::function<std::string()>& make,
                                const std::function<void(const std::string&)>& parse, const std::string& provenance) {
  const auto text = read_file(dir_ / name);
  if (text) {
    std::string problem;
    if (!manifest_.contains(name)) {
      problem = name + " has no recorded checksum";
    } else if (manifest_[name].value("sha256", "") != sha256_hex(*text)) {
      problem = name + " checksum mismatch";
    } else {
      try {
        parse(*text);
        return *text;
      } catch (const std::exception& e) {
        problem = name + " failed to load: " + e.what();
      }
    }
    warnings_[name].push_back(problem + "; rebuilt");
  }
  const auto fresh = make();
  parse(fresh);
  store(name, fresh, provenance);
  return fresh;
}

const KempeBasis& ArtifactCache::binding() {
  if (!binding_) {
    load(
        "kempe_binding.json", [] { return binding_to_json(bind_kempe_labels()); },
        [this](const std::string& t) { binding_ = binding_from_json(t); },
        "rotation-orbit search over the 14 non-crossing matchings");
  }
  return *binding_;
}

const SparsePolynomial& ArtifactCache::cubic() {
  if (!cubic_) {
    load(
        "cubic.poly", [] { return write_canonical(build_cubic_explicit()); },
        [this](const std::string& t) {
          auto p = read_canonical(t);
          if (p.variables() != kempe_names() || !p.is_homogeneous() || p.degree() != 3) {
            throw std::invalid_argument("not a cubic in the Kempe variables");
          }
          cubic_ = std::move(p);
        },
        "explicit 28-term cubic in the Kempe variables");
  }
  return *cubic_;
}

const SparsePolynomial& ArtifactCache::quintic() {
  if (!quintic_) {
    load(
        "quintic.poly",
        [this] {
          const auto q = construct_skew_quintic(seed_);
          if (q.kernel_dimension != 1) throw std::runtime_error("skew quintic is not unique; cannot build quintic.poly");
          return write_canonical(q.quintic);
        },
        [this](const std::string& t) {
          auto p = read_canonical(t);
          if (p.variables() != n8_names() || !p.is_homogeneous() || p.degree() != 5) {
            throw std::invalid_argument("not a quintic in the degree-1 invariants");
          }
          quintic_ = std::move(p);
        },
        "skew symmetrization of degree-5 monomials, seed " + std::to_string(seed_));
  }
  return *quintic_;
}

void ArtifactCache::build() {
  binding_.reset();
  cubic_.reset();
  quintic_.reset();
  for (const auto& name : artifact_names()) {
    fs::remove(dir_ / name);
    manifest_.erase(name);
  }
  binding();
  cubic();
  quintic();
}

void ArtifactCache::clean() {
  for (const auto& name : artifact_names()) fs::remove(dir_ / name);
  fs::remove(dir_ / kManifest);
  manifest_ = nlohmann::json::object();
  binding_.reset();
  cubic_.reset();
  quintic_.reset();
}

std::vector<ArtifactEntry> ArtifactCache::show() const {
  std::vector<ArtifactEntry> out;
  for (const auto& name : artifact_names()) {
    if (!manifest_.contains(name)) continue;
    ArtifactEntry e;
    e.name = name;
    e.sha256 = manifest_[name].value("sha256", "");
    e.bytes = manifest_[name].value("bytes", std::uintmax_t{0});
    e.provenance = manifest_[name].value("provenance", "");
    const auto text = read_file(dir_ / name);
    e.intact = text && sha256_hex(*text) == e.sha256;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> ArtifactCache::warnings(const std::string& name) const {
  const auto it = warnings_.find(name);
  return it == warnings_.end() ? std::vector<std::string>{} : it->second;
}

}  // namespace eightfold
