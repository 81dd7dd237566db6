#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pentaflow/errors.hpp"

namespace pentaflow {

inline constexpr const char* kToolVersion = "pentaflow 0.1.0";

/// FNV-1a 64-bit checksum. A reproducibility fingerprint for golden files,
/// not a cryptographic hash.
inline std::uint64_t fnv1a64(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

inline std::string checksum_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInput("checksum_file: cannot open " + path.string());
    }
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return hex64(fnv1a64(contents));
}

/// Provenance record emitted next to every run's outputs: what produced the
/// files, from which configuration, and the checksum of each one.
struct RunManifest {
    std::string config_hash;
    std::string tool_version = kToolVersion;
    std::vector<std::pair<std::string, std::string>> files; // (relative path, checksum)
    double duration_seconds = 0.0;

    void add_file(const std::filesystem::path& dir, const std::string& name) {
        files.emplace_back(name, checksum_file(dir / name));
    }

    nlohmann::json to_json() const {
        nlohmann::json file_list = nlohmann::json::array();
        for (const auto& [name, sum] : files) {
            file_list.push_back({{"path", name}, {"fnv1a64", sum}});
        }
        return {{"config_hash", config_hash},
                {"tool_version", tool_version},
                {"files", file_list},
                {"duration_seconds", duration_seconds}};
    }

    void write(const std::filesystem::path& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw InvalidInput("cannot write manifest: " + path.string());
        }
        out << to_json().dump(2) << '\n';
    }
};

} // namespace pentaflow
