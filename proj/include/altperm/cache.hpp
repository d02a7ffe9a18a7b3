// Append-only store of avoidance counts, one text record per line:
//
//   <key>\t<count>\t<version>\t<unix-seconds>
//
// Writes take an exclusive flock on the file; reads take a shared one.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace altperm {

inline constexpr const char* kToolVersion = "1.0.0";

struct CacheEntry {
  std::string key;
  std::uint64_t count = 0;
  std::string version;
  std::int64_t timestamp = 0;
};

class CountCache {
 public:
  explicit CountCache(std::filesystem::path dir);

  // $ALTPERM_CACHE, or ./.altperm-cache when unset.
  static std::filesystem::path default_dir();

  std::optional<std::uint64_t> lookup(const std::string& key);
  void store(const std::string& key, std::uint64_t count);

  // All entries, latest record per key wins.
  std::map<std::string, CacheEntry> entries();

  const std::filesystem::path& file() const { return file_; }

 private:
  void load();

  std::filesystem::path file_;
  std::map<std::string, CacheEntry> memo_;
  bool loaded_ = false;
};

}  // namespace altperm
