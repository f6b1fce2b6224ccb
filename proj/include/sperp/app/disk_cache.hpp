#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "sperp/symfunc.hpp"

namespace sperp::app {

/// File-per-entry memo of computed expansions under $SPERP_CACHE_DIR/v1.
///
/// Keys are the canonical request text; each file stores the key next to the
/// value, so a hash collision reads as a miss. The directory can be deleted at
/// any time.
class DiskCache {
public:
    static constexpr int kVersion = 1;

    /// Disabled when `root` is empty.
    explicit DiskCache(std::filesystem::path root);
    /// Reads SPERP_CACHE_DIR; disabled when unset or empty.
    static DiskCache from_environment();

    bool enabled() const noexcept { return !dir_.empty(); }
    std::optional<SymFunc> load(const std::string& key) const;
    /// Best effort; I/O failures are ignored.
    void store(const std::string& key, const SymFunc& value) const;

private:
    std::filesystem::path file_for(const std::string& key) const;

    std::filesystem::path dir_;
};

}  // namespace sperp::app
