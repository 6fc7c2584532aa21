#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace ceresa {

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);

/// One JSON file per key, {key, tool_version, value}; entries from another tool version are ignored.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// CERESA_CACHE_DIR, else `flag_path`, else no cache.
  static std::optional<ResultCache> from_environment(const std::optional<std::string>& flag_path);

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

  std::optional<nlohmann::json> get(const std::string& key) const;
  /// Writes to a temporary file in the cache directory, then renames it into place.
  void put(const std::string& key, const nlohmann::json& value) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace ceresa
