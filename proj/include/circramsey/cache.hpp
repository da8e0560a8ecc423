#pragma once

// Content-addressed on-disk cache: one JSON file per entry, named by the hash
// of its key. Entries carry the tool version and a payload checksum; anything
// that fails to parse or verify is treated as a miss.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace circramsey {

struct CacheEntry {
  std::string key;
  std::string payload;
  std::string tool_version;
};

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(const std::string& key) const;

  /// Payload on an exact key and version match; problems go to `warnings`.
  std::optional<std::string> get(const std::string& key, const std::string& tool_version,
                                 std::vector<std::string>& warnings) const;

  /// Write-then-rename. Failures are reported as warnings.
  void put(const CacheEntry& entry, std::vector<std::string>& warnings) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace circramsey
