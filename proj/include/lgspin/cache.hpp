#pragma once

#include <optional>
#include <string>

namespace lgspin {

// Versioned on-disk result cache. Keys are FNV-1a hashes of a canonical
// description string; entries are JSON documents stored one file per key.
class ResultCache {
public:
    ResultCache() = default;  // disabled
    explicit ResultCache(std::string directory);

    bool enabled() const { return !dir_.empty(); }
    std::optional<std::string> load(const std::string& key_desc) const;
    void store(const std::string& key_desc, const std::string& payload) const;

    static std::string hash_key(const std::string& desc);

private:
    std::string dir_;
};

}  // namespace lgspin
