#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "glasswing/attack_object.hpp"
#include "glasswing/attack_ocr.hpp"
#include "glasswing/oracle.hpp"

namespace glasswing {

enum class AttackKind { ObjectGlobal, ObjectKeyed, Ocr };

std::string attack_kind_name(AttackKind k);
AttackKind attack_kind_from_name(const std::string& name);

/// One persisted attack run: everything needed to recompute the report
/// without touching the oracle again. Serialized as one JSON object per
/// line (JSONL), schema_version 1.
struct RunRecord {
    int schema_version = 1;
    std::string run_id;
    std::string image_path;
    std::string image_digest;
    std::string oracle_id;
    AttackKind attack_kind = AttackKind::ObjectGlobal;
    nlohmann::json config;
    nlohmann::json result;
    std::uint64_t timestamp = 0; // UTC seconds
};

nlohmann::json record_to_json(const RunRecord& r);
RunRecord record_from_json(const nlohmann::json& j);

std::vector<RunRecord> read_records(const std::filesystem::path& jsonl);
void append_record(const std::filesystem::path& jsonl, const RunRecord& r);

nlohmann::json object_config_to_json(const ObjectAttackConfig& cfg);
nlohmann::json object_result_to_json(const AttackResult& r);
nlohmann::json ocr_config_to_json(const OcrAttackConfig& cfg);
nlohmann::json ocr_result_to_json(const OcrAttackResult& r);

/// One aggregated table row per API, mirroring the object-attack report
/// layout. Averages cover successful runs only; a column with no
/// contributing successes is NA.
struct ReportRow {
    std::string api;
    double asr_pct = 0.0;
    int samples = 0;
    std::optional<double> avg_eps1;
    std::optional<double> queries_eps1;
    std::optional<double> avg_eps2;
    std::optional<double> queries_eps2;
};

/// One row per successful OCR run.
struct OcrReportRow {
    std::string image_path;
    Rgb region_color;
    Rgb font_color;
    int font_px = 0;
    int min_rgb_diff = 0;
};

/// Aggregates object-attack records of a single oracle. ASR counts an
/// image as attacked successfully when any of its runs succeeded; the
/// eps1/eps2 columns average the global/keyed runs that succeeded.
ReportRow summarize(const std::vector<RunRecord>& records);

/// Collects successful OCR runs as report rows, sorted by image path.
std::vector<OcrReportRow> summarize_ocr(const std::vector<RunRecord>& records);

enum class ReportFormat { Markdown, Csv };

std::string emit_report(const std::vector<ReportRow>& rows, ReportFormat format);
std::string emit_ocr_report(const std::vector<OcrReportRow>& rows, ReportFormat format);

/// Builds the oracle used for one image's attack run. Mock providers bind
/// the clean image as their reference; HTTP providers return a shared
/// adapter. `id` must be stable: it keys cache entries and records.
class OracleProvider {
public:
    virtual ~OracleProvider() = default;
    virtual std::string id() const = 0;
    virtual std::shared_ptr<Oracle> for_image(const RasterImage& clean) const = 0;
};

struct BatchOptions {
    AttackKind kind = AttackKind::ObjectGlobal;
    ObjectAttackConfig object_cfg;
    OcrAttackConfig ocr_cfg;
    std::string text = "Hello World"; // OCR runs
    int text_x = 8;
    int text_y = 8;
    int jobs = 1;
};

/// Runs one attack per image in the dataset directory (sorted order),
/// appending a record per image to `records_path`. Re-running skips
/// images that already have a record for the same configuration, so an
/// interrupted batch resumes where it stopped. Attack failures and
/// oracle errors are recorded, never dropped. Returns the records for
/// this dataset/configuration, old and new, in dataset order.
std::vector<RunRecord> run_batch(const std::filesystem::path& dataset_dir,
                                 const OracleProvider& provider, const BatchOptions& options,
                                 const std::filesystem::path& records_path);

} // namespace glasswing
