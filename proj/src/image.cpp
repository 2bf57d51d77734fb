#include "glasswing/image.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace glasswing {

RasterImage::RasterImage(int width, int height, Rgb fill)
    : width_(width), height_(height) {
    if (width <= 0 || height <= 0)
        throw DimensionMismatch("image dimensions must be positive");
    px_.resize(static_cast<std::size_t>(width) * height * 3);
    for (std::size_t i = 0; i < px_.size(); i += 3) {
        px_[i] = fill.r;
        px_[i + 1] = fill.g;
        px_[i + 2] = fill.b;
    }
}

RasterImage::RasterImage(int width, int height, std::vector<std::uint8_t> rgb_bytes)
    : width_(width), height_(height), px_(std::move(rgb_bytes)) {
    if (width <= 0 || height <= 0)
        throw DimensionMismatch("image dimensions must be positive");
    if (px_.size() != static_cast<std::size_t>(width) * height * 3)
        throw DimensionMismatch("pixel buffer size does not match dimensions");
}

std::size_t RasterImage::index(int x, int y) const {
    if (x < 0 || y < 0 || x >= width_ || y >= height_)
        throw OutOfBounds("pixel (" + std::to_string(x) + "," + std::to_string(y) +
                          ") outside " + std::to_string(width_) + "x" + std::to_string(height_));
    return (static_cast<std::size_t>(y) * width_ + x) * 3;
}

Rgb RasterImage::at(int x, int y) const {
    const std::size_t i = index(x, y);
    return Rgb{px_[i], px_[i + 1], px_[i + 2]};
}

void RasterImage::set(int x, int y, Rgb c) {
    const std::size_t i = index(x, y);
    px_[i] = c.r;
    px_[i + 1] = c.g;
    px_[i + 2] = c.b;
}

std::size_t Mask::count() const {
    return static_cast<std::size_t>(std::count(on.begin(), on.end(), std::uint8_t{1}));
}

namespace {

std::uint8_t blend_channel(std::uint8_t c, double alpha) {
    const double out = c + alpha * (255.0 - c);
    return static_cast<std::uint8_t>(round_half_up(out));
}

void require_alpha(double alpha_pct) {
    if (!(alpha_pct >= 0.0 && alpha_pct <= 100.0))
        throw AlphaOutOfRange("alpha_pct must be in [0,100], got " + std::to_string(alpha_pct));
}

} // namespace

RasterImage whiten_blend(const RasterImage& img, double alpha_pct) {
    require_alpha(alpha_pct);
    const double alpha = alpha_pct / 100.0;
    RasterImage out = img;
    for (auto& c : out.bytes())
        c = blend_channel(c, alpha);
    return out;
}

std::pair<RasterImage, Mask> keyed_whiten_blend(const RasterImage& img, Rgb key,
                                                int tolerance, double alpha_pct) {
    require_alpha(alpha_pct);
    if (tolerance < 0 || tolerance > 255)
        throw ToleranceOutOfRange("tolerance must be in [0,255], got " + std::to_string(tolerance));

    const double alpha = alpha_pct / 100.0;
    RasterImage out = img;
    Mask mask(img.width(), img.height());

    auto matches = [&](Rgb c) {
        const int dr = std::abs(int(c.r) - int(key.r));
        const int dg = std::abs(int(c.g) - int(key.g));
        const int db = std::abs(int(c.b) - int(key.b));
        return std::max({dr, dg, db}) <= tolerance;
    };

    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            const Rgb c = img.at(x, y);
            if (!matches(c))
                continue;
            mask.set(x, y, true);
            out.set(x, y, Rgb{blend_channel(c.r, alpha), blend_channel(c.g, alpha),
                              blend_channel(c.b, alpha)});
        }
    }
    return {std::move(out), std::move(mask)};
}

Rgb pick_color(const RasterImage& img, int x, int y) {
    return img.at(x, y);
}

double mean_abs_diff(const RasterImage& a, const RasterImage& b, const Mask* region) {
    if (a.width() != b.width() || a.height() != b.height())
        throw DimensionMismatch("images differ in size");
    if (region && (region->width != a.width() || region->height != a.height()))
        throw DimensionMismatch("region mask differs in size");

    const auto pa = a.bytes();
    const auto pb = b.bytes();
    std::uint64_t sum = 0;
    std::uint64_t n = 0;

    if (!region) {
        for (std::size_t i = 0; i < pa.size(); ++i)
            sum += static_cast<std::uint64_t>(std::abs(int(pa[i]) - int(pb[i])));
        n = pa.size();
    } else {
        for (std::size_t p = 0; p < region->on.size(); ++p) {
            if (!region->on[p])
                continue;
            for (std::size_t c = 0; c < 3; ++c)
                sum += static_cast<std::uint64_t>(std::abs(int(pa[p * 3 + c]) - int(pb[p * 3 + c])));
            n += 3;
        }
    }
    if (n == 0)
        return 0.0;
    return static_cast<double>(sum) / static_cast<double>(n);
}

} // namespace glasswing
