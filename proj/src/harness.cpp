#include "glasswing/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "glasswing/digest.hpp"
#include "glasswing/image_io.hpp"

namespace glasswing {

using nlohmann::json;

std::string attack_kind_name(AttackKind k) {
    switch (k) {
    case AttackKind::ObjectGlobal: return "object-global";
    case AttackKind::ObjectKeyed: return "object-keyed";
    case AttackKind::Ocr: return "ocr";
    }
    return "object-global";
}

AttackKind attack_kind_from_name(const std::string& name) {
    if (name == "object-global")
        return AttackKind::ObjectGlobal;
    if (name == "object-keyed")
        return AttackKind::ObjectKeyed;
    if (name == "ocr")
        return AttackKind::Ocr;
    throw ConfigError("unknown attack kind: " + name);
}

namespace {

json rgb_to_json(Rgb c) {
    return json::array({c.r, c.g, c.b});
}

Rgb rgb_from_json(const json& j) {
    return Rgb{j.at(0).get<std::uint8_t>(), j.at(1).get<std::uint8_t>(),
               j.at(2).get<std::uint8_t>()};
}

std::string object_failure_name(ObjectFailure f) {
    switch (f) {
    case ObjectFailure::None: return "none";
    case ObjectFailure::CapExhausted: return "cap-exhausted";
    case ObjectFailure::PerceptibilityExceeded: return "perceptibility-exceeded";
    case ObjectFailure::DegenerateRegion: return "degenerate-region";
    case ObjectFailure::NoTargetLabel: return "no-target-label";
    }
    return "none";
}

std::string ocr_failure_name(OcrFailure f) {
    switch (f) {
    case OcrFailure::None: return "none";
    case OcrFailure::OffsetExhausted: return "offset-exhausted";
    case OcrFailure::VisibilityExceeded: return "visibility-exceeded";
    case OcrFailure::RecognizedAtZero: return "recognized-at-zero";
    }
    return "none";
}

std::string outcome_name(OcrOutcome o) {
    switch (o) {
    case OcrOutcome::FoolsHumansOnly: return "fools-humans-only";
    case OcrOutcome::FoolsBoth: return "fools-both";
    case OcrOutcome::FoolsNeither: return "fools-neither";
    case OcrOutcome::FoolsOcrOnly: return "fools-ocr-only";
    }
    return "fools-ocr-only";
}

std::string direction_name(OcrAttackConfig::Direction d) {
    switch (d) {
    case OcrAttackConfig::Direction::Darker: return "darker";
    case OcrAttackConfig::Direction::Lighter: return "lighter";
    case OcrAttackConfig::Direction::Auto: return "auto";
    }
    return "auto";
}

} // namespace

json object_config_to_json(const ObjectAttackConfig& cfg) {
    json j{{"mode", cfg.mode == PatchMode::Global ? "global" : "color-keyed"},
           {"start_alpha", cfg.start_alpha},
           {"up_step", cfg.up_step},
           {"refine_step", cfg.refine_step},
           {"refine", cfg.refine},
           {"bisect", cfg.bisect},
           {"max_alpha", cfg.max_alpha},
           {"seed", cfg.seed},
           {"tolerance", cfg.tolerance}};
    j["perceptibility_cap"] = cfg.perceptibility_cap ? json(*cfg.perceptibility_cap) : json();
    j["color_key"] = cfg.color_key ? rgb_to_json(*cfg.color_key) : json();
    j["target_label"] = cfg.target_label ? json(*cfg.target_label) : json();
    return j;
}

json object_result_to_json(const AttackResult& r) {
    json trace = json::array();
    for (const auto& t : r.trace)
        trace.push_back(json::array({t.alpha, t.evaded, t.top_label}));

    json patch{{"mode", r.patch.mode == PatchMode::Global ? "global" : "color-keyed"},
               {"alpha_pct", r.patch.alpha_pct},
               {"tolerance", r.patch.tolerance}};
    patch["color_key"] = r.patch.color_key ? rgb_to_json(*r.patch.color_key) : json();

    json j{{"success", r.success},
           {"queries", r.queries},
           {"trace", std::move(trace)},
           {"patch", std::move(patch)},
           {"target_label", r.target_label},
           {"failure", object_failure_name(r.failure)}};
    j["epsilon"] = r.success ? json(r.epsilon) : json();
    return j;
}

json ocr_config_to_json(const OcrAttackConfig& cfg) {
    return json{{"start_font_px", cfg.start_font_px},
                {"start_offset", cfg.start_offset},
                {"offset_step_down", cfg.offset_step_down},
                {"offset_step_up", cfg.offset_step_up},
                {"font_step", cfg.font_step},
                {"min_font_px", cfg.min_font_px},
                {"max_offset", cfg.max_offset},
                {"tau_vis", cfg.tau_vis},
                {"fool_both", cfg.fool_both},
                {"fool_both_font_px", cfg.fool_both_font_px},
                {"direction", direction_name(cfg.direction)},
                {"anti_alias", cfg.anti_alias},
                {"region_window", cfg.region_window},
                {"font_first", cfg.font_first}};
}

json ocr_result_to_json(const OcrAttackResult& r) {
    json trace = json::array();
    for (const auto& t : r.trace)
        trace.push_back(json::array({t.font_px, t.offset, t.recognized}));

    return json{{"success", r.success},
                {"font_px", r.font_px},
                {"font_color", rgb_to_json(r.font_color)},
                {"achieved_rgb_diff", r.achieved_rgb_diff},
                {"queries", r.queries},
                {"trace", std::move(trace)},
                {"outcome", outcome_name(r.outcome)},
                {"region_color", rgb_to_json(r.region_color)},
                {"text", r.text},
                {"position", json::array({r.position_x, r.position_y})},
                {"failure", ocr_failure_name(r.failure)}};
}

json record_to_json(const RunRecord& r) {
    return json{{"schema_version", r.schema_version},
                {"run_id", r.run_id},
                {"image_path", r.image_path},
                {"image_digest", r.image_digest},
                {"oracle_id", r.oracle_id},
                {"attack_kind", attack_kind_name(r.attack_kind)},
                {"config", r.config},
                {"result", r.result},
                {"timestamp", r.timestamp}};
}

RunRecord record_from_json(const json& j) {
    RunRecord r;
    r.schema_version = j.at("schema_version").get<int>();
    r.run_id = j.at("run_id").get<std::string>();
    r.image_path = j.at("image_path").get<std::string>();
    r.image_digest = j.at("image_digest").get<std::string>();
    r.oracle_id = j.at("oracle_id").get<std::string>();
    r.attack_kind = attack_kind_from_name(j.at("attack_kind").get<std::string>());
    r.config = j.at("config");
    r.result = j.at("result");
    r.timestamp = j.at("timestamp").get<std::uint64_t>();
    return r;
}

std::vector<RunRecord> read_records(const std::filesystem::path& jsonl) {
    std::vector<RunRecord> out;
    std::ifstream in(jsonl);
    if (!in)
        return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        out.push_back(record_from_json(json::parse(line)));
    }
    return out;
}

void append_record(const std::filesystem::path& jsonl, const RunRecord& r) {
    std::ofstream out(jsonl, std::ios::app);
    if (!out)
        throw Error("cannot append to " + jsonl.string());
    out << record_to_json(r).dump() << "\n";
}

// --- aggregation ---

ReportRow summarize(const std::vector<RunRecord>& records) {
    if (records.empty())
        throw NoRecords("no records to summarize");

    std::set<std::string> oracles;
    for (const auto& r : records)
        oracles.insert(r.oracle_id);
    if (oracles.size() > 1)
        throw MixedOracles("records span " + std::to_string(oracles.size()) + " oracles");

    std::map<std::string, bool> image_success;
    std::vector<double> eps1, q1, eps2, q2;
    bool any_object = false;

    for (const auto& r : records) {
        if (r.attack_kind == AttackKind::Ocr)
            continue;
        any_object = true;
        const bool success = r.result.value("success", false);
        auto& flag = image_success[r.image_digest];
        flag = flag || success;
        if (!success)
            continue;
        const double eps = r.result.at("epsilon").get<double>();
        const double queries = r.result.at("queries").get<double>();
        if (r.attack_kind == AttackKind::ObjectGlobal) {
            eps1.push_back(eps);
            q1.push_back(queries);
        } else {
            eps2.push_back(eps);
            q2.push_back(queries);
        }
    }
    if (!any_object)
        throw NoRecords("no object-attack records to summarize");

    const auto mean = [](const std::vector<double>& v) -> std::optional<double> {
        if (v.empty())
            return std::nullopt;
        double sum = 0.0;
        for (double x : v)
            sum += x;
        return sum / static_cast<double>(v.size());
    };

    ReportRow row;
    row.api = *oracles.begin();
    row.samples = static_cast<int>(image_success.size());
    int successes = 0;
    for (const auto& [digest, ok] : image_success)
        successes += ok ? 1 : 0;
    row.asr_pct = 100.0 * successes / row.samples;
    row.avg_eps1 = mean(eps1);
    row.queries_eps1 = mean(q1);
    row.avg_eps2 = mean(eps2);
    row.queries_eps2 = mean(q2);
    return row;
}

std::vector<OcrReportRow> summarize_ocr(const std::vector<RunRecord>& records) {
    std::vector<OcrReportRow> rows;
    for (const auto& r : records) {
        if (r.attack_kind != AttackKind::Ocr || !r.result.value("success", false))
            continue;
        OcrReportRow row;
        row.image_path = r.image_path;
        row.region_color = rgb_from_json(r.result.at("region_color"));
        row.font_color = rgb_from_json(r.result.at("font_color"));
        row.font_px = r.result.at("font_px").get<int>();
        row.min_rgb_diff = r.result.at("achieved_rgb_diff").get<int>();
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw NoRecords("no successful OCR records");
    std::sort(rows.begin(), rows.end(),
              [](const OcrReportRow& a, const OcrReportRow& b) {
                  return a.image_path < b.image_path;
              });
    return rows;
}

// --- report emission ---

namespace {

// Two decimals, then drop one trailing zero: 52 -> "52.0", 39.37 -> "39.37".
std::string fmt_metric(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    std::string s(buf);
    if (s.size() >= 2 && s.back() == '0' && s[s.size() - 2] != '.')
        s.pop_back();
    return s;
}

std::string fmt_opt(const std::optional<double>& v) {
    return v ? fmt_metric(*v) : std::string("NA");
}

std::string rgb_text(Rgb c) {
    return "(" + std::to_string(c.r) + ", " + std::to_string(c.g) + ", " +
           std::to_string(c.b) + ")";
}

} // namespace

std::string emit_report(const std::vector<ReportRow>& rows, ReportFormat format) {
    if (rows.empty())
        throw NoRows("no report rows");

    std::ostringstream out;
    if (format == ReportFormat::Markdown) {
        out << "| API | ASR (%) | Samples Tested | Avg ε₁ | Queries for ε₁ |"
               " Avg ε₂ | Queries for ε₂ |\n";
        out << "| --- | --- | --- | --- | --- | --- | --- |\n";
        for (const auto& r : rows) {
            out << "| " << r.api << " | " << fmt_metric(r.asr_pct) << " | " << r.samples
                << " | " << fmt_opt(r.avg_eps1) << " | " << fmt_opt(r.queries_eps1) << " | "
                << fmt_opt(r.avg_eps2) << " | " << fmt_opt(r.queries_eps2) << " |\n";
        }
        out << "\nAverages cover successful runs only; NA marks columns with no"
               " successful runs.\n";
    } else {
        out << "api,asr_pct,samples,avg_eps1,queries_eps1,avg_eps2,queries_eps2\n";
        for (const auto& r : rows) {
            out << r.api << ',' << fmt_metric(r.asr_pct) << ',' << r.samples << ','
                << fmt_opt(r.avg_eps1) << ',' << fmt_opt(r.queries_eps1) << ','
                << fmt_opt(r.avg_eps2) << ',' << fmt_opt(r.queries_eps2) << '\n';
        }
    }
    return out.str();
}

std::string emit_ocr_report(const std::vector<OcrReportRow>& rows, ReportFormat format) {
    if (rows.empty())
        throw NoRows("no report rows");

    std::ostringstream out;
    if (format == ReportFormat::Markdown) {
        out << "| Image | RGB Values for Region | Font color | Font size (px) |"
               " Min RGB difference |\n";
        out << "| --- | --- | --- | --- | --- |\n";
        for (const auto& r : rows) {
            out << "| " << r.image_path << " | " << rgb_text(r.region_color) << " | "
                << rgb_text(r.font_color) << " | " << r.font_px << " | " << r.min_rgb_diff
                << " |\n";
        }
    } else {
        out << "image,region_r,region_g,region_b,font_r,font_g,font_b,font_px,"
               "min_rgb_diff\n";
        for (const auto& r : rows) {
            out << r.image_path << ',' << int(r.region_color.r) << ',' << int(r.region_color.g)
                << ',' << int(r.region_color.b) << ',' << int(r.font_color.r) << ','
                << int(r.font_color.g) << ',' << int(r.font_color.b) << ',' << r.font_px << ','
                << r.min_rgb_diff << '\n';
        }
    }
    return out.str();
}

// --- batch runner ---

namespace {

bool has_image_extension(const std::filesystem::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

json batch_config_json(const OracleProvider& provider, const BatchOptions& options) {
    json j{{"kind", attack_kind_name(options.kind)}, {"oracle", provider.id()}};
    if (options.kind == AttackKind::Ocr) {
        j["config"] = ocr_config_to_json(options.ocr_cfg);
        j["text"] = options.text;
        j["position"] = json::array({options.text_x, options.text_y});
    } else {
        j["config"] = object_config_to_json(options.object_cfg);
    }
    return j;
}

RunRecord execute_one(const std::filesystem::path& image_path, const OracleProvider& provider,
                      const BatchOptions& options, const json& config_json,
                      const std::string& config_digest) {
    RunRecord rec;
    rec.image_path = image_path.string();
    rec.oracle_id = provider.id();
    rec.attack_kind = options.kind;
    rec.config = config_json;
    rec.timestamp = static_cast<std::uint64_t>(std::time(nullptr));

    RasterImage img = load_image(image_path);
    rec.image_digest = image_digest(img);
    rec.run_id = sha256_hex(rec.image_digest + "|" + rec.oracle_id + "|" +
                            attack_kind_name(options.kind) + "|" + config_digest)
                     .substr(0, 16);

    try {
        OracleSession session(provider.for_image(img));
        if (options.kind == AttackKind::Ocr) {
            const OcrAttackResult r = attack_ocr(img, options.text, options.text_x,
                                                 options.text_y, session, options.ocr_cfg);
            rec.result = ocr_result_to_json(r);
        } else {
            const AttackResult r = options.kind == AttackKind::ObjectGlobal
                                       ? attack_global(img, session, options.object_cfg)
                                       : attack_keyed(img, session, options.object_cfg);
            rec.result = object_result_to_json(r);
        }
    } catch (const Error& e) {
        rec.result = json{{"success", false}, {"error", e.what()}};
    }
    return rec;
}

} // namespace

std::vector<RunRecord> run_batch(const std::filesystem::path& dataset_dir,
                                 const OracleProvider& provider, const BatchOptions& options,
                                 const std::filesystem::path& records_path) {
    if (!std::filesystem::is_directory(dataset_dir))
        throw EmptyDataset("not a directory: " + dataset_dir.string());

    std::vector<std::filesystem::path> images;
    for (const auto& entry : std::filesystem::directory_iterator(dataset_dir)) {
        if (entry.is_regular_file() && has_image_extension(entry.path()))
            images.push_back(entry.path());
    }
    std::sort(images.begin(), images.end());
    if (images.empty())
        throw EmptyDataset("no PNG/JPEG images in " + dataset_dir.string());

    const json config_json = batch_config_json(provider, options);
    const std::string config_digest = sha256_hex(config_json.dump());

    std::map<std::string, RunRecord> existing;
    for (auto& r : read_records(records_path))
        existing.emplace(r.run_id, std::move(r));

    // A run is identified by (image, oracle, kind, config); the run id is
    // derived from exactly that, so resume checks are a map lookup.
    std::vector<std::string> run_ids(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        const RasterImage img = load_image(images[i]);
        run_ids[i] = sha256_hex(image_digest(img) + "|" + provider.id() + "|" +
                                attack_kind_name(options.kind) + "|" + config_digest)
                         .substr(0, 16);
    }

    std::vector<RunRecord> out;
    const int jobs = std::max(1, options.jobs);

    std::vector<std::optional<std::future<RunRecord>>> pending(images.size());
    std::size_t next_to_launch = 0;

    const auto launch_upto = [&](std::size_t limit) {
        while (next_to_launch < images.size() && next_to_launch < limit) {
            const std::size_t idx = next_to_launch;
            if (!existing.contains(run_ids[idx])) {
                const auto path = images[idx];
                pending[idx] = std::async(
                    jobs > 1 ? std::launch::async : std::launch::deferred,
                    [&, path] {
                        return execute_one(path, provider, options, config_json, config_digest);
                    });
            }
            ++next_to_launch;
        }
    };

    for (std::size_t i = 0; i < images.size(); ++i) {
        launch_upto(i + static_cast<std::size_t>(jobs));
        if (pending[i]) {
            RunRecord rec = pending[i]->get();
            append_record(records_path, rec);
            existing.emplace(rec.run_id, rec);
            out.push_back(std::move(rec));
        } else {
            out.push_back(existing.at(run_ids[i]));
        }
    }
    return out;
}

} // namespace glasswing
