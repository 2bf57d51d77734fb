#include "glasswing/font.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <string>

#include "font_data.hpp"

namespace glasswing {

namespace {

struct FontTable {
    std::array<GlyphBitmap, 95> glyphs{}; // index = ch - 0x20
    std::array<bool, 95> present{};
};

FontTable build_table() {
    FontTable table;
    for (std::size_t g = 0; g < fontdata::kGlyphArtCount; ++g) {
        const auto& src = fontdata::kGlyphArt[g];
        if (src.ch < 0x20 || src.ch > 0x7e)
            throw std::logic_error("font table: character out of range");
        std::string art(src.art);
        if (art.size() != static_cast<std::size_t>(kFontCellWidth * kFontCellHeight))
            throw std::logic_error(std::string("font table: glyph '") + src.ch +
                                   "' has wrong cell size");
        GlyphBitmap bm;
        for (int r = 0; r < kFontCellHeight; ++r) {
            for (int c = 0; c < kFontCellWidth; ++c) {
                const char px = art[static_cast<std::size_t>(r) * kFontCellWidth + c];
                if (px != 'X' && px != '.')
                    throw std::logic_error(std::string("font table: glyph '") + src.ch +
                                           "' has invalid cell character");
                bm.rows[r][c] = (px == 'X') ? 1 : 0;
            }
        }
        table.glyphs[src.ch - 0x20] = bm;
        table.present[src.ch - 0x20] = true;
    }
    for (std::size_t i = 0; i < table.present.size(); ++i) {
        if (!table.present[i])
            throw std::logic_error("font table: missing glyph for code " +
                                   std::to_string(i + 0x20));
    }
    return table;
}

const FontTable& font_table() {
    static const FontTable table = build_table();
    return table;
}

} // namespace

const GlyphBitmap* find_glyph(char c) {
    if (c < 0x20 || c > 0x7e)
        return nullptr;
    return &font_table().glyphs[static_cast<std::size_t>(c) - 0x20];
}

} // namespace glasswing
