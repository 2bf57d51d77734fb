#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "glasswing/image.hpp"
#include "glasswing/text_embed.hpp"

namespace glasswing {

/// One detected object as reported by a provider.
struct Detection {
    std::string label;
    double confidence = 0.0;                    // in [0,1]
    std::optional<std::array<double, 4>> bbox;  // x, y, w, h in pixels
};

/// A provider's answer to one query. Both lists are always present;
/// whichever does not apply to the query kind is simply empty.
struct Verdict {
    std::vector<Detection> detections;
    std::vector<std::string> texts;
    std::string raw;       // opaque provider payload (JSON text for HTTP providers)
    double latency_ms = 0.0;
};

nlohmann::json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

/// A detect/recognize service queried as a black box: a deterministic
/// local mock, an HTTP adapter, or a caching wrapper around either.
class Oracle {
public:
    enum class Query { Detect, RecognizeText };

    /// `counted` is false when a caching layer answered without touching
    /// the underlying service; such replies do not bill the session.
    struct Reply {
        Verdict verdict;
        bool counted = true;
    };

    virtual ~Oracle() = default;
    virtual std::string id() const = 0;
    virtual Reply query(Query q, const RasterImage& img) = 0;
};

/// Per-attack-run query accounting. Single-owner: one attack drives one
/// session sequentially. query_count bills exactly the non-cached calls.
class OracleSession {
public:
    struct TraceEntry {
        std::string request_digest;
        Verdict verdict;
    };

    explicit OracleSession(std::shared_ptr<Oracle> oracle);

    const std::string& oracle_id() const { return oracle_id_; }
    std::uint64_t query_count() const { return static_cast<std::uint64_t>(trace_.size()); }
    const std::vector<TraceEntry>& trace() const { return trace_; }

    Verdict detect(const RasterImage& img);
    Verdict recognize_text(const RasterImage& img);

private:
    Verdict run(Oracle::Query q, const RasterImage& img);

    std::shared_ptr<Oracle> oracle_;
    std::string oracle_id_;
    std::vector<TraceEntry> trace_;
};

/// Builds a deterministic detector mock. It reports `target_label` with
/// confidence max(0, 1 - mean_abs_diff(reference, candidate, region)/d_star)
/// and emits the detection only while confidence >= 0.5. Perturbation
/// severity is thus read straight off the pixel distance from the
/// reference, which makes attack schedules verifiable by hand.
std::shared_ptr<Oracle> make_mock_detector(RasterImage reference, std::string target_label,
                                           double d_star, std::optional<Mask> region = {});

/// Builds a deterministic OCR mock around a known ground truth. Given a
/// candidate image it recovers the embedding parameters by re-rendering
/// the ground-truth text over the reference at trial sizes and colors
/// until the bytes match, then recognizes the text iff the recovered
/// font color differs from region_color by at least c_star on some
/// channel (Chebyshev) and the font size is at least f_star.
/// Unrelated modifications never match, so they read as "no text".
std::shared_ptr<Oracle> make_mock_ocr(RasterImage reference, std::string ground_truth_text,
                                      int text_x, int text_y, Rgb region_color, int c_star,
                                      int f_star);

enum class CacheMode {
    Record, // serve hits from disk, forward misses and store them
    Replay  // serve only from disk; a miss raises CacheMiss
};

/// Wraps an oracle with a verdict store keyed by (oracle id, query kind,
/// pixel digest). Hits do not count toward the session's query total.
/// One JSON file per digest; writes go through a temp file + rename so
/// concurrent readers never observe partial files.
std::shared_ptr<Oracle> make_cached(std::shared_ptr<Oracle> inner,
                                    std::filesystem::path store, CacheMode mode);

/// Top-confidence label of a verdict, or "" when nothing was detected.
std::string top_label(const Verdict& v);

/// The evasion criterion: the target label is absent from the detections,
/// or something else outranks it.
bool evades_detection(const Verdict& v, const std::string& target_label);

/// True when some recognized string contains `text`.
bool recognizes_text(const Verdict& v, const std::string& text);

} // namespace glasswing
