#include "glasswing/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>

#include "glasswing/digest.hpp"

namespace glasswing {

using nlohmann::json;

json verdict_to_json(const Verdict& v) {
    json dets = json::array();
    for (const auto& d : v.detections) {
        json jd{{"label", d.label}, {"confidence", d.confidence}};
        if (d.bbox)
            jd["bbox"] = *d.bbox;
        else
            jd["bbox"] = nullptr;
        dets.push_back(std::move(jd));
    }
    return json{{"detections", std::move(dets)},
                {"texts", v.texts},
                {"raw", v.raw},
                {"latency_ms", v.latency_ms}};
}

Verdict verdict_from_json(const json& j) {
    Verdict v;
    for (const auto& jd : j.at("detections")) {
        Detection d;
        d.label = jd.at("label").get<std::string>();
        d.confidence = jd.at("confidence").get<double>();
        if (jd.contains("bbox") && !jd["bbox"].is_null())
            d.bbox = jd["bbox"].get<std::array<double, 4>>();
        v.detections.push_back(std::move(d));
    }
    v.texts = j.at("texts").get<std::vector<std::string>>();
    v.raw = j.at("raw").get<std::string>();
    v.latency_ms = j.at("latency_ms").get<double>();
    return v;
}

OracleSession::OracleSession(std::shared_ptr<Oracle> oracle)
    : oracle_(std::move(oracle)), oracle_id_(oracle_->id()) {}

Verdict OracleSession::run(Oracle::Query q, const RasterImage& img) {
    const auto reply = oracle_->query(q, img);
    if (reply.counted)
        trace_.push_back(TraceEntry{image_digest(img), reply.verdict});
    return reply.verdict;
}

Verdict OracleSession::detect(const RasterImage& img) {
    return run(Oracle::Query::Detect, img);
}

Verdict OracleSession::recognize_text(const RasterImage& img) {
    return run(Oracle::Query::RecognizeText, img);
}

std::string top_label(const Verdict& v) {
    const Detection* best = nullptr;
    for (const auto& d : v.detections)
        if (!best || d.confidence > best->confidence)
            best = &d;
    return best ? best->label : std::string{};
}

bool evades_detection(const Verdict& v, const std::string& target_label) {
    bool present = false;
    for (const auto& d : v.detections)
        present = present || d.label == target_label;
    return !present || top_label(v) != target_label;
}

bool recognizes_text(const Verdict& v, const std::string& text) {
    if (text.empty())
        return false;
    return std::any_of(v.texts.begin(), v.texts.end(), [&](const std::string& t) {
        return t.find(text) != std::string::npos;
    });
}

// --- mock detector ---

namespace {

class MockDetector final : public Oracle {
public:
    MockDetector(RasterImage reference, std::string label, double d_star,
                 std::optional<Mask> region)
        : reference_(std::move(reference)), label_(std::move(label)), d_star_(d_star),
          region_(std::move(region)) {
        if (d_star_ <= 0.0)
            throw ConfigError("mock detector: d_star must be positive");
        id_ = "mock-detect(label=" + label_ + ",dstar=" + std::to_string(d_star_) +
              ",ref=" + image_digest(reference_).substr(0, 12) + ")";
    }

    std::string id() const override { return id_; }

    Reply query(Query q, const RasterImage& img) override {
        Verdict v;
        if (q == Query::Detect) {
            const double mad = mean_abs_diff(reference_, img, region_ ? &*region_ : nullptr);
            const double conf = std::max(0.0, 1.0 - mad / d_star_);
            if (conf >= 0.5)
                v.detections.push_back(Detection{label_, conf, std::nullopt});
            v.raw = json{{"mock", "detector"}, {"mean_abs_diff", mad}, {"confidence", conf}}
                        .dump();
        } else {
            v.raw = json{{"mock", "detector"}, {"note", "no text support"}}.dump();
        }
        return Reply{std::move(v), true};
    }

private:
    RasterImage reference_;
    std::string label_;
    double d_star_;
    std::optional<Mask> region_;
    std::string id_;
};

// --- mock OCR ---

// Recognition works by parameter recovery: the mock re-renders its ground
// truth text over the stored reference image at trial font sizes and
// anti-alias modes, derives the only font colors consistent with the
// candidate's bytes, and accepts a trial when the re-render reproduces the
// candidate exactly. Anything not produced by the shared renderer fails
// every trial and reads as "no text".
class MockOcr final : public Oracle {
public:
    static constexpr int kMaxTrialFontPx = 64;

    MockOcr(RasterImage reference, std::string text, int x, int y, Rgb region_color,
            int c_star, int f_star)
        : reference_(std::move(reference)), text_(std::move(text)), x_(x), y_(y),
          region_color_(region_color), c_star_(c_star), f_star_(f_star) {
        if (c_star_ < 0)
            throw ConfigError("mock ocr: c_star must be non-negative");
        if (f_star_ < 4)
            throw ConfigError("mock ocr: f_star must be at least 4");
        id_ = "mock-ocr(cstar=" + std::to_string(c_star_) + ",fstar=" + std::to_string(f_star_) +
              ",ref=" + image_digest(reference_).substr(0, 12) + ")";
    }

    std::string id() const override { return id_; }

    Reply query(Query q, const RasterImage& img) override {
        Verdict v;
        if (q != Query::RecognizeText) {
            v.raw = json{{"mock", "ocr"}, {"note", "no detection support"}}.dump();
            return Reply{std::move(v), true};
        }

        const auto found = recover(img);
        if (!found) {
            v.raw = json{{"mock", "ocr"}, {"embedding", nullptr}}.dump();
            return Reply{std::move(v), true};
        }

        const auto [font_px, font_color] = *found;
        const int contrast = std::max({std::abs(int(font_color.r) - int(region_color_.r)),
                                       std::abs(int(font_color.g) - int(region_color_.g)),
                                       std::abs(int(font_color.b) - int(region_color_.b))});
        const bool recognized = contrast >= c_star_ && font_px >= f_star_;
        if (recognized)
            v.texts.push_back(text_);
        v.raw = json{{"mock", "ocr"},
                     {"font_px", font_px},
                     {"contrast", contrast},
                     {"recognized", recognized}}
                    .dump();
        return Reply{std::move(v), true};
    }

private:
    std::optional<std::pair<int, Rgb>> recover(const RasterImage& img) const {
        if (img.width() != reference_.width() || img.height() != reference_.height())
            return std::nullopt;
        if (img == reference_)
            return std::nullopt; // no embedding at all

        for (int font_px = 4; font_px <= kMaxTrialFontPx; ++font_px) {
            const auto [bw, bh] = text_extent(text_, font_px);
            if (x_ + bw > reference_.width() || y_ + bh > reference_.height())
                break; // larger sizes cannot fit either
            for (bool anti_alias : {false, true}) {
                if (auto color = try_trial(img, font_px, anti_alias))
                    return std::make_pair(font_px, *color);
            }
        }
        return std::nullopt;
    }

    std::optional<Rgb> try_trial(const RasterImage& img, int font_px, bool anti_alias) const {
        TextEmbedSpec spec;
        spec.text = text_;
        spec.x = x_;
        spec.y = y_;
        spec.font_size_px = font_px;
        spec.anti_alias = anti_alias;
        spec.font_color = Rgb{0, 0, 0};
        const GlyphMask& mask = trial_mask(spec);

        // The changed pixel with the strongest coverage pins the color down
        // to at most a couple of candidates per channel.
        double best_cov = 0.0;
        int bx = -1, by = -1;
        const auto img_bytes = img.bytes();
        const auto ref_bytes = reference_.bytes();
        for (std::size_t p = 0; p < mask.coverage.size(); ++p) {
            const bool changed = img_bytes[p * 3] != ref_bytes[p * 3] ||
                                 img_bytes[p * 3 + 1] != ref_bytes[p * 3 + 1] ||
                                 img_bytes[p * 3 + 2] != ref_bytes[p * 3 + 2];
            if (!changed)
                continue;
            const float cov = mask.coverage[p];
            if (cov <= 0.0f)
                return std::nullopt; // changed pixel outside the glyphs: not ours
            if (cov > best_cov) {
                best_cov = cov;
                bx = static_cast<int>(p % img.width());
                by = static_cast<int>(p / img.width());
            }
        }
        if (bx < 0)
            return std::nullopt;

        const Rgb bg = reference_.at(bx, by);
        const Rgb seen = img.at(bx, by);
        std::array<std::vector<int>, 3> channel_candidates;
        const std::array<int, 3> bgc{bg.r, bg.g, bg.b};
        const std::array<int, 3> seenc{seen.r, seen.g, seen.b};
        for (int c = 0; c < 3; ++c) {
            const double lo = (seenc[c] - 0.5 - (1.0 - best_cov) * bgc[c]) / best_cov;
            const double hi = (seenc[c] + 0.5 - (1.0 - best_cov) * bgc[c]) / best_cov;
            for (int f = std::max(0, static_cast<int>(std::ceil(lo))); f <= 255 && f < hi; ++f)
                channel_candidates[c].push_back(f);
            if (channel_candidates[c].empty() || channel_candidates[c].size() > 8)
                return std::nullopt;
        }

        for (int r : channel_candidates[0]) {
            for (int g : channel_candidates[1]) {
                for (int b : channel_candidates[2]) {
                    spec.font_color = Rgb{static_cast<std::uint8_t>(r),
                                          static_cast<std::uint8_t>(g),
                                          static_cast<std::uint8_t>(b)};
                    const auto rendered = render_text(reference_, spec).first;
                    if (rendered == img)
                        return spec.font_color;
                }
            }
        }
        return std::nullopt;
    }

    const GlyphMask& trial_mask(const TextEmbedSpec& spec) const {
        const std::uint64_t key =
            (static_cast<std::uint64_t>(spec.font_size_px) << 1) | (spec.anti_alias ? 1 : 0);
        std::lock_guard<std::mutex> lock(mask_mutex_);
        auto it = mask_cache_.find(key);
        if (it == mask_cache_.end())
            it = mask_cache_.emplace(key, render_text(reference_, spec).second).first;
        return it->second;
    }

    RasterImage reference_;
    std::string text_;
    int x_;
    int y_;
    Rgb region_color_;
    int c_star_;
    int f_star_;
    std::string id_;
    mutable std::mutex mask_mutex_;
    mutable std::map<std::uint64_t, GlyphMask> mask_cache_;
};

// --- cache wrapper ---

class CachedOracle final : public Oracle {
public:
    CachedOracle(std::shared_ptr<Oracle> inner, std::filesystem::path store, CacheMode mode)
        : inner_(std::move(inner)), store_(std::move(store)), mode_(mode) {
        std::filesystem::create_directories(store_);
    }

    std::string id() const override { return inner_->id(); }

    Reply query(Query q, const RasterImage& img) override {
        const std::string key = cache_key(q, img);
        const auto path = store_ / (key + ".json");

        if (std::filesystem::exists(path)) {
            std::ifstream in(path);
            json j;
            in >> j;
            return Reply{verdict_from_json(j.at("verdict")), false};
        }
        if (mode_ == CacheMode::Replay)
            throw CacheMiss("replay cache has no entry for digest " + key.substr(0, 16));

        Reply reply = inner_->query(q, img);
        const json j{{"schema_version", 1},
                     {"oracle_id", inner_->id()},
                     {"kind", q == Query::Detect ? "detect" : "recognize-text"},
                     {"verdict", verdict_to_json(reply.verdict)}};
        const auto tmp = store_ / (key + ".tmp");
        {
            std::ofstream out(tmp, std::ios::trunc);
            out << j.dump(2) << "\n";
        }
        std::filesystem::rename(tmp, path);
        return reply;
    }

private:
    std::string cache_key(Query q, const RasterImage& img) const {
        const std::string kind = q == Query::Detect ? "detect" : "recognize-text";
        return sha256_hex(inner_->id() + "|" + kind + "|" + image_digest(img));
    }

    std::shared_ptr<Oracle> inner_;
    std::filesystem::path store_;
    CacheMode mode_;
};

} // namespace

std::shared_ptr<Oracle> make_mock_detector(RasterImage reference, std::string target_label,
                                           double d_star, std::optional<Mask> region) {
    return std::make_shared<MockDetector>(std::move(reference), std::move(target_label), d_star,
                                          std::move(region));
}

std::shared_ptr<Oracle> make_mock_ocr(RasterImage reference, std::string ground_truth_text,
                                      int text_x, int text_y, Rgb region_color, int c_star,
                                      int f_star) {
    return std::make_shared<MockOcr>(std::move(reference), std::move(ground_truth_text), text_x,
                                     text_y, region_color, c_star, f_star);
}

std::shared_ptr<Oracle> make_cached(std::shared_ptr<Oracle> inner, std::filesystem::path store,
                                    CacheMode mode) {
    return std::make_shared<CachedOracle>(std::move(inner), std::move(store), mode);
}

} // namespace glasswing
