#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace berge {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kCacheEnvVar = "BERGE_CACHE_DIR";

struct CacheConfig {
    std::filesystem::path dir;
    bool enabled = false;
};

/// Resolves the cache directory: --cache-dir flag, then $BERGE_CACHE_DIR,
/// then ".berge-cache". Disabled when no_cache is set or the directory
/// cannot be created (with a warning on stderr).
CacheConfig cache_config(const std::optional<std::string>& flag_dir, bool no_cache);

/// Returns the stored record's result, or nullopt on miss/corruption
/// (corrupt records are ignored with a warning).
std::optional<nlohmann::json> cache_get(const CacheConfig& cfg, const std::string& key);

/// Write-then-rename; concurrent readers see old or new complete records.
bool cache_put(const CacheConfig& cfg, const std::string& key,
               const nlohmann::json& result);

} // namespace berge
