#include "glasswing/text_embed.hpp"

#include <algorithm>
#include <cmath>

#include "glasswing/font.hpp"

namespace glasswing {

int rgb_difference(Rgb c1, Rgb c2) {
    return std::abs(int(c1.r) - int(c2.r)) + std::abs(int(c1.g) - int(c2.g)) +
           std::abs(int(c1.b) - int(c2.b));
}

namespace {

std::uint8_t shift_channel(std::uint8_t c, int offset, OffsetDirection dir) {
    const int v = dir == OffsetDirection::Darker ? int(c) - offset : int(c) + offset;
    return static_cast<std::uint8_t>(std::clamp(v, 0, 255));
}

int cell_width_for(int font_size_px) {
    return std::max(1, round_half_up(font_size_px / 2.0));
}

// Bilinear sample of a glyph's binary ink grid at source position (sx, sy),
// measured in source pixel centers with edge clamping.
double sample_glyph(const GlyphBitmap& glyph, double sx, double sy) {
    const auto clamped = [](int v, int hi) { return std::clamp(v, 0, hi); };
    const int x0 = clamped(static_cast<int>(std::floor(sx)), kFontCellWidth - 1);
    const int y0 = clamped(static_cast<int>(std::floor(sy)), kFontCellHeight - 1);
    const int x1 = clamped(x0 + 1, kFontCellWidth - 1);
    const int y1 = clamped(y0 + 1, kFontCellHeight - 1);
    const double fx = std::clamp(sx - x0, 0.0, 1.0);
    const double fy = std::clamp(sy - y0, 0.0, 1.0);

    const double top = glyph.rows[y0][x0] * (1.0 - fx) + glyph.rows[y0][x1] * fx;
    const double bot = glyph.rows[y1][x0] * (1.0 - fx) + glyph.rows[y1][x1] * fx;
    return top * (1.0 - fy) + bot * fy;
}

} // namespace

Rgb offset_color(Rgb region_color, int per_channel_offset, OffsetDirection direction) {
    return Rgb{shift_channel(region_color.r, per_channel_offset, direction),
               shift_channel(region_color.g, per_channel_offset, direction),
               shift_channel(region_color.b, per_channel_offset, direction)};
}

std::pair<int, int> text_extent(const std::string& text, int font_size_px) {
    const int cw = cell_width_for(font_size_px);
    return {static_cast<int>(text.size()) * cw, font_size_px};
}

std::pair<RasterImage, GlyphMask> render_text(const RasterImage& img,
                                              const TextEmbedSpec& spec) {
    if (spec.font_size_px < 4)
        throw FontSizeTooSmall("font size " + std::to_string(spec.font_size_px) +
                               "px is below the 4px minimum");

    GlyphMask mask(img.width(), img.height());
    if (spec.text.empty())
        return {img, std::move(mask)};

    for (char ch : spec.text) {
        if (!find_glyph(ch))
            throw Error(std::string("render_text: unsupported character 0x") +
                        std::to_string(static_cast<unsigned char>(ch)));
    }

    const int cell_h = spec.font_size_px;
    const int cell_w = cell_width_for(spec.font_size_px);
    const auto [box_w, box_h] = text_extent(spec.text, spec.font_size_px);
    if (spec.x < 0 || spec.y < 0 || spec.x + box_w > img.width() ||
        spec.y + box_h > img.height())
        throw OutOfBounds("text box " + std::to_string(box_w) + "x" + std::to_string(box_h) +
                          " at (" + std::to_string(spec.x) + "," + std::to_string(spec.y) +
                          ") leaves the image");

    RasterImage out = img;
    for (std::size_t i = 0; i < spec.text.size(); ++i) {
        const GlyphBitmap& glyph = *find_glyph(spec.text[i]);
        const int gx = spec.x + static_cast<int>(i) * cell_w;

        for (int ty = 0; ty < cell_h; ++ty) {
            for (int tx = 0; tx < cell_w; ++tx) {
                const double sx = (tx + 0.5) * kFontCellWidth / cell_w - 0.5;
                const double sy = (ty + 0.5) * kFontCellHeight / cell_h - 0.5;
                double cov = sample_glyph(glyph, sx, sy);
                if (!spec.anti_alias)
                    cov = cov >= 0.5 ? 1.0 : 0.0;
                if (cov <= 0.0)
                    continue;

                const int px = gx + tx;
                const int py = spec.y + ty;
                const Rgb bg = img.at(px, py);
                const auto mix = [&](std::uint8_t b, std::uint8_t f) {
                    return static_cast<std::uint8_t>(
                        round_half_up((1.0 - cov) * b + cov * f));
                };
                out.set(px, py, Rgb{mix(bg.r, spec.font_color.r), mix(bg.g, spec.font_color.g),
                                    mix(bg.b, spec.font_color.b)});
                mask.coverage[static_cast<std::size_t>(py) * img.width() + px] =
                    static_cast<float>(cov);
            }
        }
    }
    return {std::move(out), std::move(mask)};
}

} // namespace glasswing
