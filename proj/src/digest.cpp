#include "glasswing/digest.hpp"

#include <array>
#include <stdexcept>

#include <openssl/evp.h>

namespace glasswing {

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 failed");

    static const char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0x0f]);
    }
    return out;
}

std::string sha256_hex(std::string_view text) {
    return sha256_hex(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string image_digest(const RasterImage& img) {
    std::string header = "rgb8|" + std::to_string(img.width()) + "|" +
                         std::to_string(img.height()) + "|";
    std::vector<std::uint8_t> buf(header.begin(), header.end());
    buf.insert(buf.end(), img.bytes().begin(), img.bytes().end());
    return sha256_hex(buf);
}

std::string base64_encode(std::span<const std::uint8_t> bytes) {
    std::string out;
    out.resize(4 * ((bytes.size() + 2) / 3) + 1);
    const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                  bytes.data(), static_cast<int>(bytes.size()));
    out.resize(static_cast<std::size_t>(n));
    return out;
}

} // namespace glasswing
