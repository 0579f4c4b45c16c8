#include "berge/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace berge {

namespace fs = std::filesystem;

CacheConfig cache_config(const std::optional<std::string>& flag_dir, bool no_cache) {
    CacheConfig cfg;
    if (no_cache) return cfg;
    if (flag_dir) {
        cfg.dir = *flag_dir;
    } else if (const char* env = std::getenv(kCacheEnvVar)) {
        cfg.dir = env;
    } else {
        cfg.dir = ".berge-cache";
    }
    std::error_code ec;
    fs::create_directories(cfg.dir, ec);
    if (ec || !fs::is_directory(cfg.dir)) {
        std::cerr << "warning: cache directory '" << cfg.dir.string()
                  << "' is unusable, caching disabled\n";
        return cfg;
    }
    cfg.enabled = true;
    return cfg;
}

std::optional<nlohmann::json> cache_get(const CacheConfig& cfg,
                                        const std::string& key) {
    if (!cfg.enabled) return std::nullopt;
    fs::path file = cfg.dir / (key + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    nlohmann::json record = nlohmann::json::parse(in, nullptr, false);
    if (record.is_discarded() || !record.contains("result") ||
        !record.contains("key") || record["key"] != key) {
        std::cerr << "warning: ignoring corrupt cache record '" << file.string()
                  << "'\n";
        return std::nullopt;
    }
    return record["result"];
}

bool cache_put(const CacheConfig& cfg, const std::string& key,
               const nlohmann::json& result) {
    if (!cfg.enabled) return false;
    nlohmann::json record;
    record["schema"] = 1;
    record["tool_version"] = kToolVersion;
    record["key"] = key;
    record["result"] = result;
    record["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                              std::chrono::system_clock::now().time_since_epoch())
                              .count();
    fs::path file = cfg.dir / (key + ".json");
    fs::path tmp = cfg.dir / (key + ".tmp");
    {
        std::ofstream out(tmp);
        if (!out) {
            std::cerr << "warning: cannot write cache record, caching skipped\n";
            return false;
        }
        out << record.dump(2) << "\n";
    }
    std::error_code ec;
    fs::rename(tmp, file, ec);
    if (ec) {
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

} // namespace berge
