#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gaiotto/serialize.hpp"

namespace gaiotto {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheDirEnv = "GAIOTTO_CACHE_DIR";

/// Directory of JSON table files. Each file carries a versioned header and a
/// SHA-256 of its "entries" array; files failing either check are treated as
/// misses. Writes go to a temporary file that is renamed into place, so
/// concurrent readers only ever observe complete files.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  const std::filesystem::path& directory() const { return dir_; }

  /// `header` fields are written verbatim next to format_version, entries and
  /// content_hash.
  void store(const std::string& key, Json header, const Json& entries) const;
  /// The full document when present and intact.
  std::optional<Json> load(const std::string& key) const;

  struct EntryInfo {
    std::string key;
    std::uintmax_t bytes;
    bool intact;
  };
  std::vector<EntryInfo> inspect() const;
  std::size_t clear() const;

  static std::string content_hash(const Json& entries);

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

/// Process-wide disk cache used by the table builders. Initially taken from
/// the GAIOTTO_CACHE_DIR environment variable; nullopt disables disk caching.
void set_cache_directory(std::optional<std::filesystem::path> dir);
std::optional<DiskCache> active_disk_cache();

}  // namespace gaiotto
