#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "glasswing/image.hpp"

namespace glasswing {

/// Decodes a PNG or JPEG file (sniffed by magic bytes, not extension).
/// Source alpha, if any, is flattened onto white:
/// c' = round((c*a + 255*(255-a)) / 255).
/// Throws FileNotFound or DecodeError.
RasterImage load_image(const std::filesystem::path& path);

/// Decodes PNG or JPEG from an in-memory byte buffer.
RasterImage decode_image(std::span<const std::uint8_t> bytes);

/// Writes the image as an RGB8 PNG. Lossless: loading it back yields
/// byte-identical pixels. Throws EncodeError.
void save_png(const RasterImage& img, const std::filesystem::path& path);

/// Encodes the image as PNG into a byte buffer (for HTTP payloads).
std::vector<std::uint8_t> encode_png(const RasterImage& img);

} // namespace glasswing
