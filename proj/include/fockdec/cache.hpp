#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fockdec/canonical.hpp"

namespace fockdec {

/// Embedded in every cache file; entries written under another tag are stale.
inline constexpr const char* kCacheSchema = "fockdec-matrix-v1";

/// $FOCKDEC_CACHE when set, else ".fockdec-cache" in the working directory.
std::filesystem::path default_cache_dir();

/// On-disk store of bar and decomposition matrices keyed by (kind, n, m).
/// Stale or unreadable entries are treated as absent.
class MatrixCache {
 public:
  explicit MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<BarMatrix> load_bar(int n, int m) const;
  std::optional<DecompositionMatrix> load_decomposition(int n, int m) const;
  void store(const BarMatrix& a) const;
  void store(const DecompositionMatrix& d) const;

  /// Load or compute-and-store.
  BarMatrix bar(int n, int m) const;
  DecompositionMatrix decomposition(int n, int m) const;

  std::filesystem::path path_for(const std::string& kind, int n, int m) const;

 private:
  std::optional<PartitionMatrix> load(const std::string& kind, int n, int m) const;
  void store(const std::string& kind, const PartitionMatrix& a) const;

  std::filesystem::path dir_;
};

}  // namespace fockdec
