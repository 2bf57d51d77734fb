#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glasswing/image.hpp"
#include "glasswing/oracle.hpp"
#include "glasswing/text_embed.hpp"

namespace glasswing {

/// Where an embedding lands relative to the two audiences: the OCR oracle
/// and a human with limited viewing time (proxied by the visibility
/// threshold on rgb_difference).
enum class OcrOutcome {
    FoolsHumansOnly, // recognized by OCR, invisible to humans
    FoolsBoth,       // unrecognized and invisible
    FoolsNeither,    // recognized and visible
    FoolsOcrOnly,    // unrecognized but visible
};

enum class OcrFailure {
    None,
    OffsetExhausted,    // never recognized up to max_offset at the start font
    VisibilityExceeded, // recognized, but only above the visibility threshold
    RecognizedAtZero,   // fool-both probe was recognized despite zero contrast
};

struct OcrAttackConfig {
    enum class Direction { Darker, Lighter, Auto };

    int start_font_px = 15;
    int start_offset = 10;   // per-channel color offset
    int offset_step_down = 2;
    int offset_step_up = 5;
    int font_step = 1;
    int min_font_px = 4;
    int max_offset = 85;
    int tau_vis = 30;        // rgb_difference visibility threshold
    bool fool_both = false;  // probe zero contrast at a tiny font instead
    int fool_both_font_px = 5;
    Direction direction = Direction::Auto;
    bool anti_alias = true;
    bool region_window = false; // average a 5x5 patch instead of one pixel
    bool font_first = false;    // descend font before offset
};

struct OcrTraceEntry {
    int font_px = 0;
    int offset = 0;
    bool recognized = false;
};

struct OcrAttackResult {
    bool success = false;
    int font_px = 0;
    Rgb font_color;
    int achieved_rgb_diff = 0; // recomputed from the clamped font color
    std::uint64_t queries = 0;
    std::vector<OcrTraceEntry> trace;
    OcrOutcome outcome = OcrOutcome::FoolsOcrOnly;
    RasterImage final_image;
    Rgb region_color;
    std::string text;
    int position_x = 0;
    int position_y = 0;
    OcrFailure failure = OcrFailure::None;
    OcrAttackConfig config;
};

/// Venn classification of one embedding outcome. `invisible` means
/// achieved_rgb_diff <= tau_vis.
OcrOutcome classify_outcome(bool recognized, int achieved_rgb_diff, int tau_vis);

/// Searches for the minimal (font size, per-channel offset) embedding of
/// `text` at (x, y) that the OCR oracle still recognizes. Starting from
/// (start_font_px, start_offset): if recognized, shrink the offset while
/// recognition holds, then shrink the font; if not recognized, grow the
/// offset at the start font until recognition (or give up past
/// max_offset), then shrink the font. Success additionally requires the
/// achieved rgb_difference to stay within tau_vis. In fool_both mode a
/// single probe at zero offset and a tiny font succeeds when the oracle
/// does NOT recognize the text.
OcrAttackResult attack_ocr(const RasterImage& img, const std::string& text, int x, int y,
                           OracleSession& session, const OcrAttackConfig& cfg);

} // namespace glasswing
