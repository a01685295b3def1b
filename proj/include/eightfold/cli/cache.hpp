#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eightfold/exactcore/sparse_polynomial.hpp"
#include "eightfold/m8/kempe.hpp"
#include "json.hpp"

namespace eightfold {

std::string sha256_hex(std::string_view data);

struct ArtifactEntry {
  std::string name;
  std::string sha256;
  std::uintmax_t bytes = 0;
  std::string provenance;
  /// The file on disk still has the recorded checksum.
  bool intact = false;
};

/// Files cubic.poly, quintic.poly and kempe_binding.json with SHA-256
/// checksums in manifest.json. A missing file is rebuilt silently; a file
/// whose checksum or contents do not verify is rebuilt with a warning.
class ArtifactCache {
 public:
  ArtifactCache(std::filesystem::path dir, std::uint64_t seed);

  const KempeBasis& binding();
  const SparsePolynomial& cubic();
  const SparsePolynomial& quintic();

  /// Rebuilds every artifact from scratch.
  void build();
  /// Removes the artifacts and the manifest.
  void clean();
  std::vector<ArtifactEntry> show() const;

  /// Warnings raised while loading the named artifact.
  std::vector<std::string> warnings(const std::string& name) const;

  static const std::vector<std::string>& artifact_names();

 private:
  std::string load(const std::string& name, const std::function<std::string()>& make,
                   const std::function<void(const std::string&)>& parse, const std::string& provenance);
  void store(const std::string& name, const std::string& text, const std::string& provenance);
  void save_manifest() const;

  std::filesystem::path dir_;
  std::uint64_t seed_;
  nlohmann::json manifest_;
  std::map<std::string, std::vector<std::string>> warnings_;
  std::optional<KempeBasis> binding_;
  std::optional<SparsePolynomial> cubic_;
  std::optional<SparsePolynomial> quintic_;
};

std::string binding_to_json(const KempeBasis& b);
KempeBasis binding_from_json(const std::string& text);

}  // namespace eightfold
