#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "glasswing/errors.hpp"

namespace glasswing {

/// One sRGB pixel, 8 bits per channel.
struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb&) const = default;
};

/// Decoded RGB8 bitmap. Pixels are row-major, three bytes each.
/// Images are immutable values in practice: every operation below returns
/// a new image and never mutates its input.
class RasterImage {
public:
    RasterImage() = default;
    RasterImage(int width, int height, Rgb fill = Rgb{});
    RasterImage(int width, int height, std::vector<std::uint8_t> rgb_bytes);

    int width() const { return width_; }
    int height() const { return height_; }
    bool empty() const { return px_.empty(); }

    /// Bounds-checked pixel read. Throws OutOfBounds.
    Rgb at(int x, int y) const;
    /// Bounds-checked pixel write. Throws OutOfBounds.
    void set(int x, int y, Rgb c);

    std::span<const std::uint8_t> bytes() const { return px_; }
    std::span<std::uint8_t> bytes() { return px_; }

    bool operator==(const RasterImage&) const = default;

private:
    std::size_t index(int x, int y) const;

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> px_;
};

/// Boolean per-pixel grid, aligned to an image.
struct Mask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> on; // 0 or 1, row-major

    Mask() = default;
    Mask(int w, int h) : width(w), height(h), on(static_cast<std::size_t>(w) * h, 0) {}

    bool at(int x, int y) const { return on[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { on[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
    std::size_t count() const;

    bool operator==(const Mask&) const = default;
};

/// How a transparency patch is applied.
enum class PatchMode {
    Global,    // blend the whole image
    ColorKeyed // blend only pixels close to a key color
};

/// Description of one transparency patch: the perturbation applied to an
/// image together with its intensity constraint.
struct PatchSpec {
    PatchMode mode = PatchMode::Global;
    double alpha_pct = 0.0;            // percent in [0,100]
    std::optional<Rgb> color_key;      // ColorKeyed only
    int tolerance = 0;                 // per-channel, ColorKeyed only
};

/// Rounds to the nearest integer, ties upward (127.5 -> 128).
inline int round_half_up(double v) {
    return static_cast<int>(std::floor(v + 0.5));
}

/// Blends every pixel toward white: c' = round(c + (alpha_pct/100)*(255-c)).
/// This emulates flattening an opaque white layer of the given opacity over
/// the image, which is what transparency tools hand to a vision API.
/// alpha 0 is the identity (byte-exact); alpha 100 is all-white.
RasterImage whiten_blend(const RasterImage& img, double alpha_pct);

/// Applies whiten_blend only to pixels whose color is within `tolerance`
/// of `key` on every channel (Chebyshev distance). All other pixels are
/// byte-exact unchanged. The match mask is returned for diagnostics.
std::pair<RasterImage, Mask> keyed_whiten_blend(const RasterImage& img, Rgb key,
                                                int tolerance, double alpha_pct);

/// Reads the pixel at (x, y). Throws OutOfBounds.
Rgb pick_color(const RasterImage& img, int x, int y);

/// Mean absolute per-channel difference between two images of equal size,
/// restricted to `region` when given. An empty region yields 0.
double mean_abs_diff(const RasterImage& a, const RasterImage& b,
                     const Mask* region = nullptr);

} // namespace glasswing
