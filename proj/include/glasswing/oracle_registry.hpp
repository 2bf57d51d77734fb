#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "glasswing/config.hpp"
#include "glasswing/harness.hpp"

namespace glasswing {

/// Parsed oracle identifier: a bare name ("google") or a name with inline
/// parameters ("mock-detect?dstar=85&label=gun"). Inline parameters win
/// over config-file values (`<name>.<param> = ...`).
struct OracleSpec {
    std::string name;
    std::map<std::string, std::string> params;

    static OracleSpec parse(const std::string& id);
    std::string canonical() const;
};

/// Cache bolt-on for a provider: where the store lives and whether it
/// records or replays. The mode defaults to the store's `mode` file (see
/// write_cache_mode), then to Record.
struct CacheSetup {
    std::filesystem::path dir;
    std::optional<CacheMode> mode;
};

std::optional<CacheMode> read_cache_mode(const std::filesystem::path& dir);
void write_cache_mode(const std::filesystem::path& dir, CacheMode mode);

/// Extra inputs some oracles need per run (the mock OCR binds the attack
/// text and anchor as its ground truth).
struct OracleContext {
    std::string text = "Hello World";
    int x = 8;
    int y = 8;
};

/// Builds the provider behind an oracle id. Known names: mock-detect,
/// mock-ocr, google, azure, sightengine, picpurify.
std::unique_ptr<OracleProvider> make_provider(const std::string& oracle_id,
                                              const KeyValueConfig& config,
                                              const OracleContext& context,
                                              const std::optional<CacheSetup>& cache = {});

} // namespace glasswing
