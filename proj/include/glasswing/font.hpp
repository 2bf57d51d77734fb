#pragma once

#include <array>
#include <cstdint>

namespace glasswing {

inline constexpr int kFontCellWidth = 8;
inline constexpr int kFontCellHeight = 16;

/// One glyph of the bundled monospaced bitmap font as a binary ink grid.
/// rows[r][c] is 1 where the glyph has ink. Cell is 8x16; the baseline is
/// row 11, descenders reach row 14.
struct GlyphBitmap {
    std::array<std::array<std::uint8_t, kFontCellWidth>, kFontCellHeight> rows{};
};

/// Looks up the glyph for a printable ASCII character (0x20..0x7e).
/// Returns nullptr for anything else.
const GlyphBitmap* find_glyph(char c);

} // namespace glasswing
