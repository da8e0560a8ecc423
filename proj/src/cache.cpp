#include "circramsey/cache.hpp"

#include "circramsey/hash.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <unistd.h>

namespace circramsey {

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::entry_path(const std::string& key) const {
  return dir_ / (hex64(fnv1a(key)) + ".json");
}

std::optional<std::string> ResultCache::get(const std::string& key,
                                            const std::string& tool_version,
                                            std::vector<std::string>& warnings) const {
  const auto path = entry_path(key);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    return std::nullopt;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    warnings.push_back("cache: cannot read " + path.string());
    return std::nullopt;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto doc = nlohmann::json::parse(buffer.str(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("key") ||
      !doc.contains("payload") || !doc.contains("tool_version") || !doc.contains("checksum") ||
      !doc["key"].is_string() || !doc["payload"].is_string() ||
      !doc["tool_version"].is_string() || !doc["checksum"].is_string()) {
    warnings.push_back("cache: ignoring corrupted entry " + path.string());
    return std::nullopt;
  }
  if (doc["key"] != key || doc["tool_version"] != tool_version) {
    return std::nullopt;
  }
  const std::string payload = doc["payload"];
  if (doc["checksum"] != hex64(fnv1a(payload))) {
    warnings.push_back("cache: checksum mismatch in " + path.string());
    return std::nullopt;
  }
  return payload;
}

void ResultCache::put(const CacheEntry& entry, std::vector<std::string>& warnings) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    warnings.push_back("cache: cannot create " + dir_.string() + ": " + ec.message());
    return;
  }
  const nlohmann::json doc{{"key", entry.key},
                           {"payload", entry.payload},
                           {"tool_version", entry.tool_version},
                           {"checksum", hex64(fnv1a(entry.payload))}};
  const auto path = entry_path(entry.key);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << doc.dump();
    if (!out) {
      warnings.push_back("cache: cannot write " + tmp.string());
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    warnings.push_back("cache: cannot rename into " + path.string() + ": " + ec.message());
    std::filesystem::remove(tmp, ec);
  }
}

}  // namespace circramsey
