#pragma once

#include <string>
#include <utility>
#include <vector>

#include "glasswing/image.hpp"

namespace glasswing {

/// Describes one text embedding: what to write, where, how large, and in
/// which color. Font size is the glyph cell height in pixels; cell width
/// is half of it, rounded half up.
struct TextEmbedSpec {
    std::string text;
    int x = 0; // top-left anchor
    int y = 0;
    int font_size_px = 15;
    Rgb font_color;
    bool anti_alias = true;
};

/// Per-pixel glyph coverage aligned to an image. Values are in [0,1] and
/// zero everywhere outside the rendered text box.
struct GlyphMask {
    int width = 0;
    int height = 0;
    std::vector<float> coverage;

    GlyphMask() = default;
    GlyphMask(int w, int h)
        : width(w), height(h), coverage(static_cast<std::size_t>(w) * h, 0.0f) {}

    float at(int x, int y) const { return coverage[static_cast<std::size_t>(y) * width + x]; }
};

/// L1 distance between two colors: |dR| + |dG| + |dB|.
int rgb_difference(Rgb c1, Rgb c2);

enum class OffsetDirection {
    Darker,
    Lighter,
};

/// Shifts every channel of region_color by `per_channel_offset` toward
/// black (Darker) or white (Lighter), clamping to [0,255]. Clamping can
/// shrink the achieved rgb_difference below 3*offset, so callers measure
/// the result rather than assuming it.
Rgb offset_color(Rgb region_color, int per_channel_offset, OffsetDirection direction);

/// Pixel width and height of the text box for a given spec.
std::pair<int, int> text_extent(const std::string& text, int font_size_px);

/// Rasterizes spec.text into the image with the bundled bitmap font.
/// Each covered pixel becomes round((1-cov)*background + cov*font_color)
/// per channel; with anti_alias=false coverage is binarized to {0,1}.
/// Pixels with zero coverage are byte-exact unchanged. Returns the new
/// image plus the coverage mask. Empty text is the identity.
/// Throws FontSizeTooSmall (size < 4) or OutOfBounds (box leaves image).
std::pair<RasterImage, GlyphMask> render_text(const RasterImage& img,
                                              const TextEmbedSpec& spec);

} // namespace glasswing
