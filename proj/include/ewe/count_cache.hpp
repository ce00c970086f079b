#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ewe/enumeration.hpp"
#include "ewe/shape.hpp"

namespace ewe {

struct CacheRecord {
  std::string key;
  CountTriple value;
  std::string tool_version;
  std::int64_t timestamp = 0;
};

/// Persistent avoider counts: one JSON object per line in
/// <dir>/counts.jsonl. Appends and compaction hold an exclusive lock on
/// <dir>/counts.lock; compaction rewrites through a temporary file and rename.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path dir);

  /// EWE_CACHE_DIR, else $XDG_DATA_HOME/ewe, else $HOME/.local/share/ewe.
  static std::filesystem::path default_directory();

  static std::string key(const Permutation& pattern, int n);
  static std::string key(const Permutation& pattern, const FerrersShape& shape);

  std::optional<CountTriple> lookup(const std::string& key) const;
  void store(const std::string& key, const CountTriple& value);

  /// Drops the in-memory index; reload() re-reads the file.
  void clear_memory() { index_.clear(); }
  void reload();
  /// Rewrites the file with one line per key (latest wins).
  void compact();

  std::vector<CacheRecord> records() const;
  std::size_t size() const { return index_.size(); }
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path dir_;
  std::filesystem::path file_;
  std::filesystem::path lock_;
  std::map<std::string, CacheRecord> index_;
  std::size_t lines_ = 0;
};

/// avoidance_vector that consults and fills the cache (cache may be null).
AvoidanceVector cached_avoidance_vector(CountCache* cache, const Permutation& pattern, int max_n,
                                        const EnumerationOptions& opts);
CountTriple cached_count_shape(CountCache* cache, const FerrersShape& shape, const Permutation& pattern,
                               const EnumerationOptions& opts);

struct CacheMismatch {
  std::string key;
  CountTriple cached;
  CountTriple fresh;
};

/// Recomputes up to `sample` cached entries (evenly spread over the key
/// order; 0 means all) and returns every disagreement.
std::vector<CacheMismatch> verify_cache(const CountCache& cache, std::size_t sample, const EnumerationOptions& opts);

}  // namespace ewe
