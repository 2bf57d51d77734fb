#pragma once

#include <cstddef>

namespace glasswing::fontdata {

// The bundled font: one entry per printable ASCII character. `art` is
// 16 rows of 8 characters each, concatenated row-major; 'X' marks ink,
// '.' marks background. Parsed once by font.cpp.
struct GlyphArt {
    char ch;
    const char* art;
};

extern const GlyphArt kGlyphArt[];
extern const std::size_t kGlyphArtCount;

} // namespace glasswing::fontdata
