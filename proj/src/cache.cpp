#include "lgspin/cache.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lgspin {

namespace {
constexpr int kCacheVersion = 1;
}

ResultCache::ResultCache(std::string directory) : dir_(std::move(directory)) {
    if (dir_.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) dir_.clear();  // unwritable path disables caching
}

std::string ResultCache::hash_key(const std::string& desc) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : desc) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::optional<std::string> ResultCache::load(const std::string& key_desc) const {
    if (!enabled()) return std::nullopt;
    auto path = std::filesystem::path(dir_) / (hash_key(key_desc) + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (...) {
        return std::nullopt;
    }
    if (!doc.is_object() || doc.value("version", -1) != kCacheVersion) return std::nullopt;
    if (doc.value("key", std::string{}) != key_desc) return std::nullopt;  // hash collision
    if (!doc.contains("result")) return std::nullopt;
    return doc["result"].get<std::string>();
}

void ResultCache::store(const std::string& key_desc, const std::string& payload) const {
    if (!enabled()) return;
    nlohmann::json doc;
    doc["version"] = kCacheVersion;
    doc["key"] = key_desc;
    doc["result"] = payload;
    auto path = std::filesystem::path(dir_) / (hash_key(key_desc) + ".json");
    std::ofstream out(path);
    out << doc.dump();
}

}  // namespace lgspin
