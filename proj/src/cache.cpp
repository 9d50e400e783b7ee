#include "gaiotto/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>

#include <openssl/sha.h>

namespace gaiotto {

namespace fs = std::filesystem;

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path DiskCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::string DiskCache::content_hash(const Json& entries) {
  const std::string text = entries.dump();
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), digest);
  std::ostringstream os;
  for (unsigned char c : digest) os << std::hex << std::setw(2) << std::setfill('0') << int(c);
  return os.str();
}

void DiskCache::store(const std::string& key, Json header, const Json& entries) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  Json doc = Json::object();
  doc["format_version"] = kCacheFormatVersion;
  for (auto& [k, v] : header.items()) doc[k] = v;
  doc["content_hash"] = content_hash(entries);
  doc["entries"] = entries;

  std::random_device rd;
  const fs::path final_path = path_for(key);
  const fs::path tmp = dir_ / (key + ".tmp." + std::to_string(rd()));
  {
    std::ofstream out(tmp);
    if (!out) return;  // cache is best effort
    out << doc.dump();
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, final_path, ec);
  if (ec) fs::remove(tmp, ec);
}

std::optional<Json> DiskCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  if (doc.value("format_version", -1) != kCacheFormatVersion) return std::nullopt;
  if (!doc.contains("entries") || !doc.contains("content_hash")) return std::nullopt;
  if (doc["content_hash"] != content_hash(doc["entries"])) return std::nullopt;
  return doc;
}

std::vector<DiskCache::EntryInfo> DiskCache::inspect() const {
  std::vector<EntryInfo> out;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return out;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.path().extension() != ".json") continue;
    const std::string key = e.path().stem().string();
    out.push_back({key, e.file_size(), load(key).has_value()});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return out;
}

std::size_t DiskCache::clear() const {
  std::size_t n = 0;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return 0;
  for (const auto& e : fs::directory_iterator(dir_)) {
    const auto name = e.path().filename().string();
    if (e.path().extension() == ".json" || name.find(".tmp.") != std::string::npos) {
      fs::remove(e.path(), ec);
      ++n;
    }
  }
  return n;
}

namespace {

struct CacheSetting {
  std::mutex mu;
  bool initialized = false;
  std::optional<fs::path> dir;
};

CacheSetting& cache_setting() {
  static CacheSetting s;
  return s;
}

}  // namespace

void set_cache_directory(std::optional<fs::path> dir) {
  auto& s = cache_setting();
  std::lock_guard lock(s.mu);
  s.initialized = true;
  s.dir = std::move(dir);
}

std::optional<DiskCache> active_disk_cache() {
  auto& s = cache_setting();
  std::lock_guard lock(s.mu);
  if (!s.initialized) {
    s.initialized = true;
    if (const char* env = std::getenv(kCacheDirEnv); env && *env) s.dir = fs::path(env);
  }
  if (!s.dir) return std::nullopt;
  return DiskCache(*s.dir);
}

}  // namespace gaiotto
