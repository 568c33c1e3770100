#include "solaris/raster/codec.hpp"

#include <png.h>

#include <bit>
#include <csetjmp>
#include <cstring>

#include <nlohmann/json.hpp>

namespace solaris::raster {

namespace {

struct MemReader {
    const std::uint8_t* data;
    std::size_t size;
    std::size_t pos;
};

extern "C" void mem_read_fn(png_structp png, png_bytep out, png_size_t n) {
    auto* r = static_cast<MemReader*>(png_get_io_ptr(png));
    if (r->pos + n > r->size) {
        png_error(png, "unexpected end of PNG stream");
    }
    std::memcpy(out, r->data + r->pos, n);
    r->pos += n;
}

extern "C" void mem_write_fn(png_structp png, png_bytep data, png_size_t n) {
    auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
    out->insert(out->end(), data, data + n);
}

extern "C" void mem_flush_fn(png_structp) {}

extern "C" void store_error_fn(png_structp png, png_const_charp msg) {
    auto* err = static_cast<std::string*>(png_get_error_ptr(png));
    if (err && err->empty()) *err = msg;
    longjmp(png_jmpbuf(png), 1);
}

extern "C" void ignore_warning_fn(png_structp, png_const_charp) {}

}  // namespace

RasterImage decode_image(std::span<const std::uint8_t> bytes,
                         const geo::GeoTransform& gt, std::string crs_id) {
    if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
        throw DecodeError("not a PNG stream");
    }

    std::string err;
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &err,
                                             store_error_fn, ignore_warning_fn);
    if (!png) throw DecodeError("libpng read struct allocation failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw DecodeError("libpng info struct allocation failed");
    }

    MemReader reader{bytes.data(), bytes.size(), 0};
    // Locals mutated after setjmp live on the heap or are re-read only
    // before the longjmp target; the image is built after all libpng calls.
    std::vector<png_bytep> rows;
    std::vector<std::uint8_t> raw;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError("PNG decode failed: " +
                          (err.empty() ? std::string("corrupt stream") : err));
    }

    png_set_read_fn(png, &reader, mem_read_fn);
    png_read_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    const int color_type = png_get_color_type(png, info);
    int depth = png_get_bit_depth(png, info);

    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && depth < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
    }
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    if (depth == 16 && std::endian::native == std::endian::little) {
        png_set_swap(png);
    }
    (void)png_set_interlace_handling(png);
    png_read_update_info(png, info);

    depth = png_get_bit_depth(png, info);
    const int channels = png_get_channels(png, info);
    if ((channels != 1 && channels != 3) || (depth != 8 && depth != 16)) {
        longjmp(png_jmpbuf(png), 1);  // routed to DecodeError above
    }

    const std::size_t rowbytes = png_get_rowbytes(png, info);
    raw.resize(rowbytes * height);
    rows.resize(height);
    for (png_uint_32 r = 0; r < height; ++r) {
        rows[r] = raw.data() + r * rowbytes;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    RasterImage img(static_cast<int>(width), static_cast<int>(height),
                    channels, depth, gt, std::move(crs_id));
    img.bytes() = std::move(raw);
    return img;
}

std::string sidecar_json(const RasterImage& img) {
    nlohmann::json j;
    j["crs_id"] = img.crs_id();
    j["origin_x"] = img.geotransform().origin_x();
    j["origin_y"] = img.geotransform().origin_y();
    j["pixel_size"] = img.geotransform().pixel_size();
    j["width"] = img.width();
    j["height"] = img.height();
    j["bands"] = img.bands();
    return j.dump();
}

EncodedImage encode_image(const RasterImage& img) {
    if (img.bit_depth() != 8) {
        throw UnsupportedDepth("16-bit encode not supported; convert with to_8bit");
    }

    std::string err;
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &err,
                                              store_error_fn, ignore_warning_fn);
    if (!png) throw RasterError("libpng write struct allocation failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw RasterError("libpng info struct allocation failed");
    }

    EncodedImage out;
    std::vector<png_const_bytep> rows(static_cast<std::size_t>(img.height()));
    const std::size_t rowbytes =
        static_cast<std::size_t>(img.width()) * img.bands();
    for (int r = 0; r < img.height(); ++r) {
        rows[static_cast<std::size_t>(r)] = img.bytes().data() + r * rowbytes;
    }

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw RasterError("PNG encode failed: " +
                          (err.empty() ? std::string("internal error") : err));
    }

    png_set_write_fn(png, &out.png, mem_write_fn, mem_flush_fn);
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()),
                 static_cast<png_uint_32>(img.height()), 8,
                 img.bands() == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, const_cast<png_bytepp>(rows.data()));
    png_write_end(png, info);
    png_destroy_write_struct(&png, &info);

    out.sidecar_json = sidecar_json(img);
    return out;
}

}  // namespace solaris::raster
