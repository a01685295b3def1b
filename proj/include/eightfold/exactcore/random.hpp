#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace eightfold {

/// Deterministic random stream derived from a master seed and a stream
/// name, so that each operation draws from its own reproducible substream.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::string_view name);

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi], portable across standard libraries.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace eightfold
