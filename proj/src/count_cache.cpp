#include "ewe/count_cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "ewe/errors.hpp"

namespace ewe {

namespace {

// Holds an exclusive flock for its lifetime.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path) {
    fd_ = ::open(path.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ < 0) throw std::runtime_error("cannot open lock file " + path.string());
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw std::runtime_error("cannot lock " + path.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

nlohmann::json to_json(const CacheRecord& r) {
  return {{"key", r.key},
          {"total", r.value.total},
          {"even", r.value.even},
          {"odd", r.value.odd},
          {"tool_version", r.tool_version},
          {"timestamp", r.timestamp}};
}

std::int64_t now_seconds() {
  return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count();
}

}  // namespace

CountCache::CountCache(std::filesystem::path dir)
    : dir_(std::move(dir)), file_(dir_ / "counts.jsonl"), lock_(dir_ / "counts.lock") {
  std::filesystem::create_directories(dir_);
  reload();
}

std::filesystem::path CountCache::default_directory() {
  if (const char* env = std::getenv("EWE_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "ewe";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".local" / "share" / "ewe";
  return std::filesystem::temp_directory_path() / "ewe";
}

std::string CountCache::key(const Permutation& pattern, int n) {
  return "perm:" + to_string(pattern) + "|n:" + std::to_string(n);
}

std::string CountCache::key(const Permutation& pattern, const FerrersShape& shape) {
  return "perm:" + to_string(pattern) + "|shape:" + to_string(shape);
}

void CountCache::reload() {
  index_.clear();
  lines_ = 0;
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++lines_;
    // A torn final line from an interrupted writer is skipped.
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("key")) continue;
    CacheRecord r;
    r.key = j.at("key").get<std::string>();
    r.value = {j.at("total").get<std::uint64_t>(), j.at("even").get<std::uint64_t>(), j.at("odd").get<std::uint64_t>()};
    r.tool_version = j.value("tool_version", "");
    r.timestamp = j.value("timestamp", std::int64_t{0});
    index_[r.key] = std::move(r);
  }
}

std::optional<CountTriple> CountCache::lookup(const std::string& key) const {
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second.value;
}

void CountCache::store(const std::string& key, const CountTriple& value) {
  CacheRecord r{key, value, EWE_VERSION, now_seconds()};
  {
    FileLock lock(lock_);
    std::ofstream out(file_, std::ios::app);
    out << to_json(r).dump() << '\n';
    if (!out) throw std::runtime_error("cannot append to " + file_.string());
  }
  ++lines_;
  index_[key] = std::move(r);
  if (lines_ > 64 && lines_ > 2 * index_.size()) compact();
}

void CountCache::compact() {
  FileLock lock(lock_);
  // Pick up records other processes appended since our last read.
  {
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
      const auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("key")) continue;
      const auto key = j.at("key").get<std::string>();
      if (index_.count(key)) continue;
      index_[key] = CacheRecord{key,
                                {j.at("total").get<std::uint64_t>(), j.at("even").get<std::uint64_t>(),
                                 j.at("odd").get<std::uint64_t>()},
                                j.value("tool_version", ""),
                                j.value("timestamp", std::int64_t{0})};
    }
  }
  const auto tmp = dir_ / "counts.jsonl.tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    for (const auto& [key, r] : index_) out << to_json(r).dump() << '\n';
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, file_);
  lines_ = index_.size();
}

std::vector<CacheRecord> CountCache::records() const {
  std::vector<CacheRecord> out;
  out.reserve(index_.size());
  for (const auto& [key, r] : index_) out.push_back(r);
  return out;
}

AvoidanceVector cached_avoidance_vector(CountCache* cache, const Permutation& pattern, int max_n,
                                        const EnumerationOptions& opts) {
  if (cache) {
    AvoidanceVector hit{pattern, {}};
    for (int n = 0; n <= max_n; ++n) {
      const auto c = cache->lookup(CountCache::key(pattern, n));
      if (!c) break;
      hit.entries.push_back(*c);
    }
    if (hit.horizon() == max_n) return hit;
  }
  auto fresh = avoidance_vector(pattern, max_n, opts);
  if (cache)
    for (int n = 0; n <= max_n; ++n)
      if (!cache->lookup(CountCache::key(pattern, n))) cache->store(CountCache::key(pattern, n), fresh.entries[n]);
  return fresh;
}

CountTriple cached_count_shape(CountCache* cache, const FerrersShape& shape, const Permutation& pattern,
                               const EnumerationOptions& opts) {
  const auto key = CountCache::key(pattern, shape);
  if (cache)
    if (auto hit = cache->lookup(key)) return *hit;
  const auto fresh = count_avoiders_shape(shape, pattern, opts);
  if (cache) cache->store(key, fresh);
  return fresh;
}

std::vector<CacheMismatch> verify_cache(const CountCache& cache, std::size_t sample, const EnumerationOptions& opts) {
  const auto all = cache.records();
  std::vector<CacheMismatch> out;
  if (all.empty()) return out;
  const std::size_t take = sample == 0 || sample >= all.size() ? all.size() : sample;
  for (std::size_t i = 0; i < take; ++i) {
    const auto& r = all[i * all.size() / take];
    const auto bar = r.key.find('|');
    if (r.key.rfind("perm:", 0) != 0 || bar == std::string::npos) throw usage_error("malformed cache key " + r.key);
    const Permutation pattern = parse_permutation(r.key.substr(5, bar - 5));
    const std::string rest = r.key.substr(bar + 1);
    CountTriple fresh;
    if (rest.rfind("n:", 0) == 0) {
      fresh = count_avoiders(std::stoi(rest.substr(2)), pattern, opts);
    } else if (rest.rfind("shape:", 0) == 0) {
      fresh = count_avoiders_shape(parse_shape(rest.substr(6)), pattern, opts);
    } else {
      throw usage_error("malformed cache key " + r.key);
    }
    if (!(fresh == r.value)) out.push_back({r.key, r.value, fresh});
  }
  return out;
}

}  // namespace ewe
