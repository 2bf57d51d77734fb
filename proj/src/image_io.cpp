#include "glasswing/image_io.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>

#include <jpeglib.h>
#include <png.h>

namespace glasswing {

namespace {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FileNotFound("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

bool looks_png(std::span<const std::uint8_t> b) {
    static const std::uint8_t sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    return b.size() >= 8 && std::memcmp(b.data(), sig, 8) == 0;
}

bool looks_jpeg(std::span<const std::uint8_t> b) {
    return b.size() >= 2 && b[0] == 0xff && b[1] == 0xd8;
}

RasterImage decode_png(std::span<const std::uint8_t> bytes) {
    png_image im;
    std::memset(&im, 0, sizeof(im));
    im.version = PNG_IMAGE_VERSION;

    if (!png_image_begin_read_from_memory(&im, bytes.data(), bytes.size()))
        throw DecodeError(std::string("png: ") + im.message);

    im.format = PNG_FORMAT_RGBA;
    std::vector<std::uint8_t> rgba(PNG_IMAGE_SIZE(im));
    if (!png_image_finish_read(&im, nullptr, rgba.data(), 0, nullptr)) {
        png_image_free(&im);
        throw DecodeError(std::string("png: ") + im.message);
    }

    const int w = static_cast<int>(im.width);
    const int h = static_cast<int>(im.height);
    std::vector<std::uint8_t> rgb(static_cast<std::size_t>(w) * h * 3);
    for (std::size_t p = 0, n = static_cast<std::size_t>(w) * h; p < n; ++p) {
        const std::uint8_t a = rgba[p * 4 + 3];
        for (std::size_t c = 0; c < 3; ++c) {
            const std::uint8_t v = rgba[p * 4 + c];
            // flatten onto white
            rgb[p * 3 + c] = static_cast<std::uint8_t>(
                round_half_up((v * int(a) + 255.0 * (255 - a)) / 255.0));
        }
    }
    return RasterImage(w, h, std::move(rgb));
}

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    std::jmp_buf jump;
    char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message);
    std::longjmp(err->jump, 1);
}

RasterImage decode_jpeg(std::span<const std::uint8_t> bytes) {
    jpeg_decompress_struct cinfo;
    JpegErrorMgr jerr;
    cinfo.err = jpeg_std_error(&jerr.pub);
    jerr.pub.error_exit = jpeg_error_exit;

    std::vector<std::uint8_t> rgb;
    int w = 0, h = 0;

    if (setjmp(jerr.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw DecodeError(std::string("jpeg: ") + jerr.message);
    }

    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    w = static_cast<int>(cinfo.output_width);
    h = static_cast<int>(cinfo.output_height);
    if (cinfo.output_components != 3) {
        jpeg_destroy_decompress(&cinfo);
        throw DecodeError("jpeg: unsupported color layout");
    }

    rgb.resize(static_cast<std::size_t>(w) * h * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        std::uint8_t* row = rgb.data() + static_cast<std::size_t>(cinfo.output_scanline) * w * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);

    return RasterImage(w, h, std::move(rgb));
}

} // namespace

RasterImage decode_image(std::span<const std::uint8_t> bytes) {
    if (looks_png(bytes))
        return decode_png(bytes);
    if (looks_jpeg(bytes))
        return decode_jpeg(bytes);
    throw DecodeError("unrecognized image format (expect PNG or JPEG)");
}

RasterImage load_image(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path))
        throw FileNotFound("no such file: " + path.string());
    return decode_image(read_file(path));
}

std::vector<std::uint8_t> encode_png(const RasterImage& img) {
    png_image im;
    std::memset(&im, 0, sizeof(im));
    im.version = PNG_IMAGE_VERSION;
    im.width = static_cast<png_uint_32>(img.width());
    im.height = static_cast<png_uint_32>(img.height());
    im.format = PNG_FORMAT_RGB;

    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&im, nullptr, &size, 0, img.bytes().data(), 0, nullptr))
        throw EncodeError(std::string("png: ") + im.message);
    std::vector<std::uint8_t> out(size);
    if (!png_image_write_to_memory(&im, out.data(), &size, 0, img.bytes().data(), 0, nullptr))
        throw EncodeError(std::string("png: ") + im.message);
    out.resize(size);
    return out;
}

void save_png(const RasterImage& img, const std::filesystem::path& path) {
    const auto bytes = encode_png(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw EncodeError("cannot open for write: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw EncodeError("short write: " + path.string());
}

} // namespace glasswing
