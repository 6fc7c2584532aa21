#include "ceresa/cli/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "ceresa/version.hpp"

namespace ceresa {

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::optional<ResultCache> ResultCache::from_environment(const std::optional<std::string>& flag_path) {
  if (const char* env = std::getenv("CERESA_CACHE_DIR"); env != nullptr && *env != '\0') return ResultCache(env);
  if (flag_path && !flag_path->empty()) return ResultCache(*flag_path);
  return std::nullopt;
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
  return dir_ / name.str();
}

std::optional<nlohmann::json> ResultCache::get(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  const nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (entry.value("key", "") != key || entry.value("tool_version", "") != kToolVersion) return std::nullopt;
  if (!entry.contains("value")) return std::nullopt;
  return entry["value"];
}

void ResultCache::put(const std::string& key, const nlohmann::json& value) const {
  std::filesystem::create_directories(dir_);
  const std::filesystem::path target = path_for(key);
  std::random_device rd;
  const std::filesystem::path tmp = target.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    out << nlohmann::json{{"key", key}, {"tool_version", kToolVersion}, {"value", value}}.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace ceresa
