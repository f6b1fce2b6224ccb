#include "sperp/app/disk_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "sperp/app/format.hpp"

namespace sperp::app {

DiskCache::DiskCache(std::filesystem::path root) {
    if (!root.empty()) dir_ = root / ("v" + std::to_string(kVersion));
}

DiskCache DiskCache::from_environment() {
    const char* env = std::getenv("SPERP_CACHE_DIR");
    return DiskCache(env ? std::filesystem::path(env) : std::filesystem::path());
}

std::filesystem::path DiskCache::file_for(const std::string& key) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(h));
    return dir_ / name;
}

std::optional<SymFunc> DiskCache::load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(file_for(key));
    if (!in) return std::nullopt;
    try {
        const auto j = nlohmann::json::parse(in);
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        return from_json(j);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void DiskCache::store(const std::string& key, const SymFunc& value) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;
    auto j = to_json(value, key, "", 0);
    j["key"] = key;
    const auto path = file_for(key);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump();
        if (!out) return;
    }
    std::filesystem::rename(tmp, path, ec);
}

}  // namespace sperp::app
