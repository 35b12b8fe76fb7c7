#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "exceptio/primescan.hpp"

namespace exceptio {

// One file per polynomial key; each line is `limit<TAB>f1,f2,...`.
class ScanCache {
 public:
  struct Entry {
    u64 limit = 0;
    std::vector<u64> failures;
  };

  explicit ScanCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

  // Entry with the largest recorded limit. Throws CorruptCacheEntry on any
  // malformed line, IoError when the file exists but cannot be read.
  std::optional<Entry> load(const std::string& key) const;

  // Replaces the file for the report's key. Throws IoError.
  void store(const ScanReport& report) const;

 private:
  std::filesystem::path dir_;
};

struct CachedScan {
  ScanReport report;
  bool cache_hit = false;   // served at least partly from the cache
  bool extended = false;    // cached limit was below the request
  bool recovered = false;   // a corrupt entry was discarded and rescanned
};

// Scan that reuses and extends cached failure lists. A cached entry is only
// trusted up to its recorded limit.
CachedScan scan_with_cache(const FactoredPolynomial& f, u64 limit, const ScanCache& cache,
                           const ScanOptions& options = {});

}  // namespace exceptio
