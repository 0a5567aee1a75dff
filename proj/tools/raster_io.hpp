#ifndef HIERSEG_TOOLS_RASTER_IO_HPP
#define HIERSEG_TOOLS_RASTER_IO_HPP

#include <png.h>

#include <csetjmp>
#include <cstddef>
#include <cstring>
#include <string>
#include <vector>

#include "hierseg/image.hpp"
#include "hierseg/pgm.hpp"

namespace hierseg::tools {

inline bool looks_like_png(const std::string& data) {
    return data.size() >= 8 && png_sig_cmp(reinterpret_cast<png_const_bytep>(data.data()), 0, 8) == 0;
}

namespace detail {

struct PngSource {
    const std::string* data;
    std::size_t pos;
};

struct PngPixels {
    png_uint_32 width = 0;
    png_uint_32 height = 0;
    int depth = 0;
    bool greyscale = true;
    std::vector<png_byte> bytes;
    std::vector<png_bytep> rows;
};

// libpng reports errors by longjmp, so this frame holds no objects with
// destructors; all buffers live in `out`, owned by the caller.
inline bool read_png_pixels(png_structp png, png_infop info, PngPixels& out) {
    if (setjmp(png_jmpbuf(png))) return false;
    png_read_info(png, info);
    out.width = png_get_image_width(png, info);
    out.height = png_get_image_height(png, info);
    out.depth = png_get_bit_depth(png, info);
    if (png_get_color_type(png, info) != PNG_COLOR_TYPE_GRAY) {
        out.greyscale = false;
        return true;
    }
    if (out.depth < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
        out.depth = 8;
    }
    png_read_update_info(png, info);
    const std::size_t row_bytes = png_get_rowbytes(png, info);
    out.bytes.resize(row_bytes * out.height);
    out.rows.resize(out.height);
    for (png_uint_32 y = 0; y < out.height; ++y) out.rows[y] = out.bytes.data() + y * row_bytes;
    png_read_image(png, out.rows.data());
    png_read_end(png, nullptr);
    return true;
}

}  // namespace detail

// Greyscale PNG, 1 to 16 bits per sample. Samples are returned unscaled,
// except that 1/2/4-bit images are widened to 8 bits.
inline GridImage decode_png(const std::string& data) {
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                             [](png_structp, png_const_charp) {});
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw io_error("cannot initialise the PNG decoder");
    }
    detail::PngSource source{&data, 0};
    png_set_read_fn(png, &source, [](png_structp p, png_bytep out, png_size_t n) {
        auto* s = static_cast<detail::PngSource*>(png_get_io_ptr(p));
        if (s->pos + n > s->data->size()) png_error(p, "truncated PNG");
        std::memcpy(out, s->data->data() + s->pos, n);
        s->pos += n;
    });
    detail::PngPixels px;
    const bool ok = detail::read_png_pixels(png, info, px);
    png_destroy_read_struct(&png, &info, nullptr);
    if (!ok) throw io_error("malformed PNG");
    if (!px.greyscale) throw io_error("only greyscale PNG without alpha is supported");

    std::vector<Level> values(static_cast<std::size_t>(px.width) * px.height);
    for (png_uint_32 y = 0; y < px.height; ++y)
        for (png_uint_32 x = 0; x < px.width; ++x) {
            const auto* s = px.rows[y] + (px.depth == 16 ? 2 * x : x);
            values[static_cast<std::size_t>(y) * px.width + x] =
                px.depth == 16 ? (Level{s[0]} << 8) | s[1] : Level{s[0]};
        }
    return GridImage(px.width, px.height, std::move(values), static_cast<unsigned>(px.depth));
}

// PNG or PGM, detected from the file signature.
inline GridImage read_raster(const std::string& path) {
    const auto data = read_file(path);
    return looks_like_png(data) ? decode_png(data) : parse_pgm(data);
}

}  // namespace hierseg::tools

#endif
