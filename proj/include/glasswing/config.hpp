#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace glasswing {

/// Flat key-value configuration: one `key = value` per line, `#` starts a
/// comment, keys are dotted per provider (google.endpoint, azure.api_key,
/// mock-detect.dstar, ...). Credentials may be given literally via
/// `<provider>.api_key` or referenced from the environment via
/// `<provider>.api_key_env`.
struct KeyValueConfig {
    std::map<std::string, std::string> values;

    static KeyValueConfig load(const std::filesystem::path& path);

    std::optional<std::string> get(const std::string& key) const;
    std::string get_or(const std::string& key, std::string fallback) const;
};

} // namespace glasswing
