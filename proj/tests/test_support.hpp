#pragma once

#include <atomic>
#include <filesystem>
#include <random>
#include <string>

#include "glasswing/image.hpp"

namespace glasswing::test {

inline RasterImage uniform_image(int w, int h, Rgb c) {
    return RasterImage(w, h, c);
}

inline RasterImage random_image(int w, int h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(w) * h * 3);
    for (auto& b : bytes)
        b = static_cast<std::uint8_t>(rng() & 0xff);
    return RasterImage(w, h, std::move(bytes));
}

inline std::filesystem::path make_temp_dir(const std::string& tag) {
    static std::atomic<int> counter{0};
    const auto dir = std::filesystem::temp_directory_path() /
                     ("glasswing-" + tag + "-" + std::to_string(::getpid()) + "-" +
                      std::to_string(counter++));
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace glasswing::test
