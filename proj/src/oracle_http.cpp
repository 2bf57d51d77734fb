#include "glasswing/oracle_http.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "glasswing/digest.hpp"
#include "glasswing/image_io.hpp"

namespace glasswing {

using nlohmann::json;

namespace providers {

std::string google_request_body(const RasterImage& img, Oracle::Query q) {
    const auto png = encode_png(img);
    const char* feature =
        q == Oracle::Query::Detect ? "OBJECT_LOCALIZATION" : "TEXT_DETECTION";
    const json body{
        {"requests",
         json::array({json{{"image", {{"content", base64_encode(png)}}},
                           {"features", json::array({json{{"type", feature},
                                                          {"maxResults", 50}}})}}})}};
    return body.dump();
}

Verdict parse_google(const std::string& body, Oracle::Query q, int img_w, int img_h) {
    Verdict v;
    v.raw = body;
    const json j = json::parse(body);
    if (j.contains("error"))
        throw TransportError("google: " + j["error"].value("message", "request failed"));
    if (!j.contains("responses") || j["responses"].empty())
        return v;
    const json& r = j["responses"][0];
    if (r.contains("error"))
        throw TransportError("google: " + r["error"].value("message", "request failed"));

    if (q == Oracle::Query::Detect) {
        for (const auto& obj : r.value("localizedObjectAnnotations", json::array())) {
            Detection d;
            d.label = obj.value("name", "");
            d.confidence = obj.value("score", 0.0);
            if (obj.contains("boundingPoly") &&
                obj["boundingPoly"].contains("normalizedVertices")) {
                double min_x = 1.0, min_y = 1.0, max_x = 0.0, max_y = 0.0;
                for (const auto& vert : obj["boundingPoly"]["normalizedVertices"]) {
                    min_x = std::min(min_x, vert.value("x", 0.0));
                    min_y = std::min(min_y, vert.value("y", 0.0));
                    max_x = std::max(max_x, vert.value("x", 0.0));
                    max_y = std::max(max_y, vert.value("y", 0.0));
                }
                d.bbox = {{min_x * img_w, min_y * img_h, (max_x - min_x) * img_w,
                           (max_y - min_y) * img_h}};
            }
            v.detections.push_back(std::move(d));
        }
    } else {
        for (const auto& t : r.value("textAnnotations", json::array())) {
            if (t.contains("description"))
                v.texts.push_back(t["description"].get<std::string>());
        }
        if (v.texts.empty() && r.contains("fullTextAnnotation"))
            v.texts.push_back(r["fullTextAnnotation"].value("text", ""));
    }
    return v;
}

Verdict parse_azure(const std::string& body, double min_confidence) {
    Verdict v;
    v.raw = body;
    const json j = json::parse(body);
    if (j.contains("error"))
        throw TransportError("azure: " + j["error"].value("message", "request failed"));
    for (const auto& obj : j.value("objects", json::array())) {
        Detection d;
        d.label = obj.value("object", "");
        d.confidence = obj.value("confidence", 0.0);
        if (obj.contains("rectangle")) {
            const auto& rect = obj["rectangle"];
            d.bbox = {{rect.value("x", 0.0), rect.value("y", 0.0), rect.value("w", 0.0),
                       rect.value("h", 0.0)}};
        }
        if (d.confidence >= min_confidence)
            v.detections.push_back(std::move(d));
    }
    return v;
}

Verdict parse_sightengine(const std::string& body, double min_confidence) {
    Verdict v;
    v.raw = body;
    const json j = json::parse(body);
    if (j.value("status", "") == "failure")
        throw TransportError("sightengine: " +
                             j.value("error", json::object()).value("message", "request failed"));

    double score = 0.0;
    if (j.contains("weapon")) {
        const json& w = j["weapon"];
        if (w.is_number()) {
            score = w.get<double>();
        } else if (w.is_object() && w.contains("classes")) {
            for (const auto& [name, val] : w["classes"].items()) {
                (void)name;
                if (val.is_number())
                    score = std::max(score, val.get<double>());
            }
        }
    }
    if (score >= min_confidence)
        v.detections.push_back(Detection{"weapon", score, std::nullopt});
    return v;
}

Verdict parse_picpurify(const std::string& body, double min_confidence) {
    Verdict v;
    v.raw = body;
    const json j = json::parse(body);
    if (j.value("status", "") == "error")
        throw TransportError("picpurify: " +
                             j.value("error", json::object()).value("errorMsg", "request failed"));
    if (j.contains("gun_moderation")) {
        const json& g = j["gun_moderation"];
        const double score = g.value("confidence_score_gun", 0.0);
        if (g.value("gun_content", false) && score >= min_confidence)
            v.detections.push_back(Detection{"gun", score, std::nullopt});
    }
    return v;
}

} // namespace providers

namespace {

/// Shared plumbing: one client per adapter, a minimum inter-request delay,
/// and a fixed retry count on transport failures.
class HttpOracleBase : public Oracle {
public:
    HttpOracleBase(ProviderConfig cfg, std::string id)
        : cfg_(std::move(cfg)), id_(std::move(id)), client_(cfg_.endpoint) {
        client_.set_connection_timeout(15, 0);
        client_.set_read_timeout(30, 0);
    }

    std::string id() const override { return id_; }

protected:
    using PostFn = std::function<httplib::Result()>;

    std::string post_with_retries(const PostFn& post) {
        for (int attempt = 0;; ++attempt) {
            throttle();
            httplib::Result res = post();
            if (!res) {
                if (attempt >= cfg_.retries)
                    throw TransportError(id_ + ": " + httplib::to_string(res.error()));
                continue;
            }
            if (res->status == 429)
                throw QuotaExceeded(id_ + ": provider reports quota exhausted");
            if (res->status >= 400)
                throw TransportError(id_ + ": HTTP " + std::to_string(res->status) + " " +
                                     res->body.substr(0, 200));
            return res->body;
        }
    }

    ProviderConfig cfg_;
    std::string id_;
    httplib::Client client_;

private:
    void throttle() {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto now = std::chrono::steady_clock::now();
        if (last_request_.time_since_epoch().count() != 0) {
            const auto earliest =
                last_request_ + std::chrono::milliseconds(cfg_.rate_limit_ms);
            if (now < earliest)
                std::this_thread::sleep_for(earliest - now);
        }
        last_request_ = std::chrono::steady_clock::now();
    }

    std::mutex mutex_;
    std::chrono::steady_clock::time_point last_request_{};
};

class GoogleOracle final : public HttpOracleBase {
public:
    explicit GoogleOracle(ProviderConfig cfg) : HttpOracleBase(std::move(cfg), "google") {}

    Reply query(Query q, const RasterImage& img) override {
        const std::string path =
            (cfg_.path.empty() ? "/v1/images:annotate" : cfg_.path) + "?key=" + cfg_.credential;
        const std::string body = providers::google_request_body(img, q);
        const auto t0 = std::chrono::steady_clock::now();
        const std::string response = post_with_retries(
            [&] { return client_.Post(path, body, "application/json"); });
        Verdict v = providers::parse_google(response, q, img.width(), img.height());
        v.latency_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        return Reply{std::move(v), true};
    }
};

class AzureOracle final : public HttpOracleBase {
public:
    explicit AzureOracle(ProviderConfig cfg) : HttpOracleBase(std::move(cfg), "azure") {}

    Reply query(Query q, const RasterImage& img) override {
        if (q != Query::Detect)
            throw TransportError("azure adapter supports object detection only");
        const std::string path = cfg_.path.empty()
                                     ? "/vision/v3.2/analyze?visualFeatures=Objects"
                                     : cfg_.path;
        const auto png = encode_png(img);
        const std::string body(reinterpret_cast<const char*>(png.data()), png.size());
        const httplib::Headers headers{{"Ocp-Apim-Subscription-Key", cfg_.credential}};
        const auto t0 = std::chrono::steady_clock::now();
        const std::string response = post_with_retries([&] {
            return client_.Post(path, headers, body, "application/octet-stream");
        });
        Verdict v = providers::parse_azure(response, cfg_.min_confidence);
        v.latency_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        return Reply{std::move(v), true};
    }
};

class SightengineOracle final : public HttpOracleBase {
public:
    explicit SightengineOracle(ProviderConfig cfg)
        : HttpOracleBase(std::move(cfg), "sightengine") {
        const auto comma = cfg_.credential.find(',');
        if (comma == std::string::npos)
            throw ConfigError("sightengine credential must be \"api_user,api_secret\"");
        api_user_ = cfg_.credential.substr(0, comma);
        api_secret_ = cfg_.credential.substr(comma + 1);
    }

    Reply query(Query q, const RasterImage& img) override {
        if (q != Query::Detect)
            throw TransportError("sightengine adapter supports weapon detection only");
        const std::string path = cfg_.path.empty() ? "/1.0/check.json" : cfg_.path;
        const auto png = encode_png(img);
        const httplib::MultipartFormDataItems items{
            {"models", "weapon", "", ""},
            {"api_user", api_user_, "", ""},
            {"api_secret", api_secret_, "", ""},
            {"media", std::string(reinterpret_cast<const char*>(png.data()), png.size()),
             "image.png", "image/png"},
        };
        const auto t0 = std::chrono::steady_clock::now();
        const std::string response =
            post_with_retries([&] { return client_.Post(path, items); });
        Verdict v = providers::parse_sightengine(response, cfg_.min_confidence);
        v.latency_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        return Reply{std::move(v), true};
    }

private:
    std::string api_user_;
    std::string api_secret_;
};

class PicpurifyOracle final : public HttpOracleBase {
public:
    explicit PicpurifyOracle(ProviderConfig cfg)
        : HttpOracleBase(std::move(cfg), "picpurify") {}

    Reply query(Query q, const RasterImage& img) override {
        if (q != Query::Detect)
            throw TransportError("picpurify adapter supports gun detection only");
        const std::string path = cfg_.path.empty() ? "/analyse/1.1" : cfg_.path;
        const auto png = encode_png(img);
        const httplib::MultipartFormDataItems items{
            {"API_KEY", cfg_.credential, "", ""},
            {"task", "gun_moderation", "", ""},
            {"file_image", std::string(reinterpret_cast<const char*>(png.data()), png.size()),
             "image.png", "image/png"},
        };
        const auto t0 = std::chrono::steady_clock::now();
        const std::string response =
            post_with_retries([&] { return client_.Post(path, items); });
        Verdict v = providers::parse_picpurify(response, cfg_.min_confidence);
        v.latency_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        return Reply{std::move(v), true};
    }
};

} // namespace

std::shared_ptr<Oracle> make_google_oracle(ProviderConfig cfg) {
    if (cfg.endpoint.empty())
        cfg.endpoint = "https://vision.googleapis.com";
    return std::make_shared<GoogleOracle>(std::move(cfg));
}

std::shared_ptr<Oracle> make_azure_oracle(ProviderConfig cfg) {
    if (cfg.endpoint.empty())
        throw ConfigError("azure adapter needs its resource endpoint configured");
    return std::make_shared<AzureOracle>(std::move(cfg));
}

std::shared_ptr<Oracle> make_sightengine_oracle(ProviderConfig cfg) {
    if (cfg.endpoint.empty())
        cfg.endpoint = "https://api.sightengine.com";
    return std::make_shared<SightengineOracle>(std::move(cfg));
}

std::shared_ptr<Oracle> make_picpurify_oracle(ProviderConfig cfg) {
    if (cfg.endpoint.empty())
        cfg.endpoint = "https://www.picpurify.com";
    return std::make_shared<PicpurifyOracle>(std::move(cfg));
}

} // namespace glasswing
