#include "solaris/raster/image.hpp"

#include <algorithm>

namespace solaris::raster {

RasterImage::RasterImage(int width, int height, int bands, int bit_depth,
                         geo::GeoTransform gt, std::string crs_id,
                         std::uint16_t fill)
    : width_(width), height_(height), bands_(bands), bit_depth_(bit_depth),
      gt_(gt), crs_id_(std::move(crs_id)) {
    if (width_ <= 0 || height_ <= 0) {
        throw RasterError("raster dimensions must be positive");
    }
    if (bands_ != 1 && bands_ != 3) {
        throw RasterError("raster bands must be 1 or 3");
    }
    if (bit_depth_ != 8 && bit_depth_ != 16) {
        throw RasterError("raster bit depth must be 8 or 16");
    }
    const std::size_t n = sample_count() * (bit_depth_ == 8 ? 1 : 2);
    if (bit_depth_ == 8) {
        bytes_.assign(n, static_cast<std::uint8_t>(fill));
    } else {
        bytes_.resize(n);
        for (std::size_t i = 0; i < sample_count(); ++i) {
            std::memcpy(bytes_.data() + 2 * i, &fill, 2);
        }
    }
}

RasterImage RasterImage::to_8bit() const {
    if (bit_depth_ == 8) return *this;

    RasterImage out(width_, height_, bands_, 8, gt_, crs_id_);
    for (int b = 0; b < bands_; ++b) {
        std::uint16_t lo = 0xffff;
        std::uint16_t hi = 0;
        for (int r = 0; r < height_; ++r) {
            for (int c = 0; c < width_; ++c) {
                const std::uint16_t v = sample(c, r, b);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        const double span = (hi > lo) ? static_cast<double>(hi - lo) : 1.0;
        for (int r = 0; r < height_; ++r) {
            for (int c = 0; c < width_; ++c) {
                const double v = (sample(c, r, b) - lo) * 255.0 / span;
                out.set_sample(c, r, b,
                               static_cast<std::uint16_t>(v + 0.5));
            }
        }
    }
    return out;
}

}  // namespace solaris::raster
