#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "glasswing/image.hpp"

namespace glasswing {

/// SHA-256 of a byte buffer, lowercase hex.
std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_hex(std::string_view text);

/// Digest of an image's decoded pixels (dimensions + raw RGB bytes), not of
/// any encoded file. Re-encoding the same pixels keeps the digest stable.
std::string image_digest(const RasterImage& img);

/// Base64 without line breaks (for JSON request payloads).
std::string base64_encode(std::span<const std::uint8_t> bytes);

} // namespace glasswing
