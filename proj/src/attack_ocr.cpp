#include "glasswing/attack_ocr.hpp"

#include <algorithm>
#include <cmath>

namespace glasswing {

OcrOutcome classify_outcome(bool recognized, int achieved_rgb_diff, int tau_vis) {
    const bool invisible = achieved_rgb_diff <= tau_vis;
    if (recognized)
        return invisible ? OcrOutcome::FoolsHumansOnly : OcrOutcome::FoolsNeither;
    return invisible ? OcrOutcome::FoolsBoth : OcrOutcome::FoolsOcrOnly;
}

namespace {

Rgb region_color_at(const RasterImage& img, int x, int y, bool window) {
    if (!window)
        return pick_color(img, x, y);

    int sum_r = 0, sum_g = 0, sum_b = 0, n = 0;
    for (int dy = -2; dy <= 2; ++dy) {
        for (int dx = -2; dx <= 2; ++dx) {
            const int px = x + dx;
            const int py = y + dy;
            if (px < 0 || py < 0 || px >= img.width() || py >= img.height())
                continue;
            const Rgb c = img.at(px, py);
            sum_r += c.r;
            sum_g += c.g;
            sum_b += c.b;
            ++n;
        }
    }
    return Rgb{std::uint8_t(round_half_up(double(sum_r) / n)),
               std::uint8_t(round_half_up(double(sum_g) / n)),
               std::uint8_t(round_half_up(double(sum_b) / n))};
}

OffsetDirection resolve_direction(OcrAttackConfig::Direction d, Rgb region) {
    switch (d) {
    case OcrAttackConfig::Direction::Darker:
        return OffsetDirection::Darker;
    case OcrAttackConfig::Direction::Lighter:
        return OffsetDirection::Lighter;
    case OcrAttackConfig::Direction::Auto:
        break;
    }
    // Rec.601 luma; dark regions get lighter text so offsets don't clamp
    // away immediately.
    const int luma = (299 * region.r + 587 * region.g + 114 * region.b) / 1000;
    return luma >= 128 ? OffsetDirection::Darker : OffsetDirection::Lighter;
}

class OcrSearch {
public:
    OcrSearch(const RasterImage& img, std::string text, int x, int y, OracleSession& session,
              OcrAttackConfig cfg)
        : img_(img), session_(session), cfg_(cfg) {
        result_.text = std::move(text);
        result_.position_x = x;
        result_.position_y = y;
        result_.config = cfg_;
        result_.region_color = region_color_at(img, x, y, cfg_.region_window);
        direction_ = resolve_direction(cfg_.direction, result_.region_color);

        const auto [bw, bh] = text_extent(result_.text, cfg_.start_font_px);
        if (x < 0 || y < 0 || x + bw > img.width() || y + bh > img.height())
            throw TextDoesNotFit("text box " + std::to_string(bw) + "x" + std::to_string(bh) +
                                 " at (" + std::to_string(x) + "," + std::to_string(y) +
                                 ") leaves the image");
    }

    OcrAttackResult run() {
        return cfg_.fool_both ? run_fool_both() : run_search();
    }

private:
    RasterImage embed(int font_px, int offset) const {
        TextEmbedSpec spec;
        spec.text = result_.text;
        spec.x = result_.position_x;
        spec.y = result_.position_y;
        spec.font_size_px = font_px;
        spec.font_color = offset_color(result_.region_color, offset, direction_);
        spec.anti_alias = cfg_.anti_alias;
        return render_text(img_, spec).first;
    }

    bool probe(int font_px, int offset) {
        const RasterImage cand = embed(font_px, offset);
        const Verdict v = session_.recognize_text(cand);
        const bool rec = recognizes_text(v, result_.text);
        result_.trace.push_back(OcrTraceEntry{font_px, offset, rec});
        return rec;
    }

    OcrAttackResult run_fool_both() {
        const int font = cfg_.fool_both_font_px;
        const bool rec = probe(font, 0);
        fill_result(font, 0);
        result_.success = !rec;
        result_.failure = rec ? OcrFailure::RecognizedAtZero : OcrFailure::None;
        result_.outcome = classify_outcome(rec, result_.achieved_rgb_diff, cfg_.tau_vis);
        return finish();
    }

    OcrAttackResult run_search() {
        int font = cfg_.start_font_px;
        int offset = cfg_.start_offset;

        if (!probe(font, offset)) {
            // phase C: climb the offset at the start font
            bool found = false;
            for (offset += cfg_.offset_step_up; offset <= cfg_.max_offset;
                 offset += cfg_.offset_step_up) {
                if (probe(font, offset)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                const int last = std::min(offset - cfg_.offset_step_up, cfg_.max_offset);
                fill_result(font, last);
                result_.failure = OcrFailure::OffsetExhausted;
                result_.outcome =
                    classify_outcome(false, result_.achieved_rgb_diff, cfg_.tau_vis);
                return finish();
            }
            font = descend_font(font, offset);
        } else if (cfg_.font_first) {
            font = descend_font(font, offset);
            offset = descend_offset(font, offset);
        } else {
            offset = descend_offset(font, offset);
            font = descend_font(font, offset);
        }

        fill_result(font, offset);
        result_.success = result_.achieved_rgb_diff <= cfg_.tau_vis;
        result_.failure = result_.success ? OcrFailure::None : OcrFailure::VisibilityExceeded;
        result_.outcome = classify_outcome(true, result_.achieved_rgb_diff, cfg_.tau_vis);
        return finish();
    }

    int descend_offset(int font, int offset) {
        for (int next = offset - cfg_.offset_step_down; next >= 0;
             next -= cfg_.offset_step_down) {
            if (!probe(font, next))
                break;
            offset = next;
        }
        return offset;
    }

    int descend_font(int font, int offset) {
        for (int next = font - cfg_.font_step; next >= cfg_.min_font_px;
             next -= cfg_.font_step) {
            if (!probe(next, offset))
                break;
            font = next;
        }
        return font;
    }

    void fill_result(int font, int offset) {
        result_.font_px = font;
        result_.font_color = offset_color(result_.region_color, offset, direction_);
        result_.achieved_rgb_diff = rgb_difference(result_.region_color, result_.font_color);
        result_.final_image = embed(font, offset);
    }

    OcrAttackResult finish() {
        result_.queries = result_.trace.size();
        return std::move(result_);
    }

    const RasterImage& img_;
    OracleSession& session_;
    OcrAttackConfig cfg_;
    OffsetDirection direction_ = OffsetDirection::Darker;
    OcrAttackResult result_;
};

} // namespace

OcrAttackResult attack_ocr(const RasterImage& img, const std::string& text, int x, int y,
                           OracleSession& session, const OcrAttackConfig& cfg) {
    if (cfg.min_font_px < 4)
        throw ConfigError("min_font_px must be at least 4");
    if (text.empty())
        throw ConfigError("attack text must be non-empty");
    return OcrSearch(img, text, x, y, session, cfg).run();
}

} // namespace glasswing
