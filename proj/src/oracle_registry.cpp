#include "glasswing/oracle_registry.hpp"

#include <cstdlib>
#include <fstream>

#include "glasswing/oracle_http.hpp"

namespace glasswing {

OracleSpec OracleSpec::parse(const std::string& id) {
    OracleSpec spec;
    const auto qmark = id.find('?');
    spec.name = id.substr(0, qmark);
    if (qmark == std::string::npos)
        return spec;

    std::string rest = id.substr(qmark + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto amp = rest.find('&', pos);
        if (amp == std::string::npos)
            amp = rest.size();
        const std::string pair = rest.substr(pos, amp - pos);
        const auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("oracle id: malformed parameter '" + pair + "'");
        spec.params[pair.substr(0, eq)] = pair.substr(eq + 1);
        pos = amp + 1;
    }
    return spec;
}

std::string OracleSpec::canonical() const {
    std::string out = name;
    char sep = '?';
    for (const auto& [k, v] : params) { // std::map: sorted, stable
        out += sep;
        out += k + "=" + v;
        sep = '&';
    }
    return out;
}

std::optional<CacheMode> read_cache_mode(const std::filesystem::path& dir) {
    std::ifstream in(dir / "mode");
    if (!in)
        return std::nullopt;
    std::string word;
    in >> word;
    if (word == "record")
        return CacheMode::Record;
    if (word == "replay")
        return CacheMode::Replay;
    throw ConfigError("cache mode file holds '" + word + "', expected record or replay");
}

void write_cache_mode(const std::filesystem::path& dir, CacheMode mode) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / "mode", std::ios::trunc);
    if (!out)
        throw Error("cannot write cache mode under " + dir.string());
    out << (mode == CacheMode::Record ? "record" : "replay") << "\n";
}

namespace {

class ParamReader {
public:
    ParamReader(const OracleSpec& spec, const KeyValueConfig& config)
        : spec_(spec), config_(config) {}

    std::optional<std::string> get(const std::string& key) const {
        const auto it = spec_.params.find(key);
        if (it != spec_.params.end())
            return it->second;
        return config_.get(spec_.name + "." + key);
    }

    std::string get_or(const std::string& key, std::string fallback) const {
        const auto v = get(key);
        return v ? *v : std::move(fallback);
    }

    double number_or(const std::string& key, double fallback) const {
        const auto v = get(key);
        if (!v)
            return fallback;
        try {
            return std::stod(*v);
        } catch (const std::exception&) {
            throw ConfigError(spec_.name + "." + key + ": not a number: " + *v);
        }
    }

private:
    const OracleSpec& spec_;
    const KeyValueConfig& config_;
};

std::shared_ptr<Oracle> maybe_cache(std::shared_ptr<Oracle> oracle,
                                    const std::optional<CacheSetup>& cache) {
    if (!cache)
        return oracle;
    CacheMode mode = CacheMode::Record;
    if (cache->mode)
        mode = *cache->mode;
    else if (const auto file_mode = read_cache_mode(cache->dir))
        mode = *file_mode;
    return make_cached(std::move(oracle), cache->dir, mode);
}

class MockDetectProvider final : public OracleProvider {
public:
    MockDetectProvider(double d_star, std::string label, std::optional<CacheSetup> cache)
        : d_star_(d_star), label_(std::move(label)), cache_(std::move(cache)) {
        id_ = "mock-detect?dstar=" + std::to_string(d_star_) + "&label=" + label_;
    }

    std::string id() const override { return id_; }

    std::shared_ptr<Oracle> for_image(const RasterImage& clean) const override {
        return maybe_cache(make_mock_detector(clean, label_, d_star_), cache_);
    }

private:
    double d_star_;
    std::string label_;
    std::optional<CacheSetup> cache_;
    std::string id_;
};

class MockOcrProvider final : public OracleProvider {
public:
    MockOcrProvider(int c_star, int f_star, OracleContext context,
                    std::optional<CacheSetup> cache)
        : c_star_(c_star), f_star_(f_star), context_(std::move(context)),
          cache_(std::move(cache)) {
        id_ = "mock-ocr?cstar=" + std::to_string(c_star_) + "&fstar=" +
              std::to_string(f_star_) + "&text=" + context_.text + "&x=" +
              std::to_string(context_.x) + "&y=" + std::to_string(context_.y);
    }

    std::string id() const override { return id_; }

    std::shared_ptr<Oracle> for_image(const RasterImage& clean) const override {
        const Rgb region = pick_color(clean, context_.x, context_.y);
        return maybe_cache(
            make_mock_ocr(clean, context_.text, context_.x, context_.y, region, c_star_, f_star_),
            cache_);
    }

private:
    int c_star_;
    int f_star_;
    OracleContext context_;
    std::optional<CacheSetup> cache_;
    std::string id_;
};

class HttpProvider final : public OracleProvider {
public:
    HttpProvider(std::string name, std::shared_ptr<Oracle> oracle,
                 std::optional<CacheSetup> cache)
        : name_(std::move(name)), oracle_(std::move(oracle)), cache_(std::move(cache)) {}

    std::string id() const override { return name_; }

    std::shared_ptr<Oracle> for_image(const RasterImage&) const override {
        return maybe_cache(oracle_, cache_);
    }

private:
    std::string name_;
    std::shared_ptr<Oracle> oracle_;
    std::optional<CacheSetup> cache_;
};

std::string resolve_credential(const ParamReader& params, const std::string& provider) {
    if (const auto literal = params.get("api_key"))
        return *literal;
    if (const auto env_name = params.get("api_key_env")) {
        const char* value = std::getenv(env_name->c_str());
        if (!value)
            throw ConfigError(provider + ": environment variable " + *env_name + " is not set");
        return value;
    }
    return {};
}

ProviderConfig provider_config(const ParamReader& params, const std::string& provider) {
    ProviderConfig cfg;
    cfg.endpoint = params.get_or("endpoint", "");
    cfg.path = params.get_or("path", "");
    cfg.credential = resolve_credential(params, provider);
    cfg.rate_limit_ms = static_cast<long>(params.number_or("rate_limit_ms", 1000));
    cfg.retries = static_cast<int>(params.number_or("retries", 2));
    cfg.min_confidence = params.number_or("min_confidence", 0.5);
    return cfg;
}

} // namespace

std::unique_ptr<OracleProvider> make_provider(const std::string& oracle_id,
                                              const KeyValueConfig& config,
                                              const OracleContext& context,
                                              const std::optional<CacheSetup>& cache) {
    const OracleSpec spec = OracleSpec::parse(oracle_id);
    const ParamReader params(spec, config);

    if (spec.name == "mock-detect") {
        return std::make_unique<MockDetectProvider>(
            params.number_or("dstar", 85.0), params.get_or("label", "object"), cache);
    }
    if (spec.name == "mock-ocr") {
        return std::make_unique<MockOcrProvider>(
            static_cast<int>(params.number_or("cstar", 8)),
            static_cast<int>(params.number_or("fstar", 9)), context, cache);
    }
    if (spec.name == "google")
        return std::make_unique<HttpProvider>(
            "google", make_google_oracle(provider_config(params, "google")), cache);
    if (spec.name == "azure")
        return std::make_unique<HttpProvider>(
            "azure", make_azure_oracle(provider_config(params, "azure")), cache);
    if (spec.name == "sightengine")
        return std::make_unique<HttpProvider>(
            "sightengine", make_sightengine_oracle(provider_config(params, "sightengine")),
            cache);
    if (spec.name == "picpurify")
        return std::make_unique<HttpProvider>(
            "picpurify", make_picpurify_oracle(provider_config(params, "picpurify")), cache);

    throw ConfigError("unknown oracle: " + spec.name);
}

} // namespace glasswing
