#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "solaris/geo/types.hpp"

namespace solaris::raster {

struct RasterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DecodeError : RasterError {
    using RasterError::RasterError;
};
struct UnsupportedDepth : RasterError {
    using RasterError::RasterError;
};
struct DimensionMismatch : RasterError {
    using RasterError::RasterError;
};
struct FactorMismatch : RasterError {
    using RasterError::RasterError;
};

/// In-memory raster: 1 (gray/IR) or 3 (RGB) bands, 8 or 16 bits per sample,
/// row-major band-interleaved, with an affine geotransform and a CRS tag.
/// 16-bit rasters exist on the decode path only; processing converts to
/// 8-bit first (see to_8bit).
class RasterImage {
public:
    RasterImage(int width, int height, int bands, int bit_depth,
                geo::GeoTransform gt, std::string crs_id,
                std::uint16_t fill = 0);

    int width() const { return width_; }
    int height() const { return height_; }
    int bands() const { return bands_; }
    int bit_depth() const { return bit_depth_; }
    const geo::GeoTransform& geotransform() const { return gt_; }
    const std::string& crs_id() const { return crs_id_; }

    std::size_t sample_count() const {
        return static_cast<std::size_t>(width_) * height_ * bands_;
    }

    std::uint16_t sample(int col, int row, int band) const {
        const std::size_t i = sample_index(col, row, band);
        if (bit_depth_ == 8) return bytes_[i];
        std::uint16_t v;
        std::memcpy(&v, bytes_.data() + 2 * i, 2);
        return v;
    }

    void set_sample(int col, int row, int band, std::uint16_t value) {
        const std::size_t i = sample_index(col, row, band);
        if (bit_depth_ == 8) {
            bytes_[i] = static_cast<std::uint8_t>(value);
        } else {
            std::memcpy(bytes_.data() + 2 * i, &value, 2);
        }
    }

    /// Raw sample storage: 1 byte per sample at depth 8, 2 native-endian
    /// bytes at depth 16.
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t>& bytes() { return bytes_; }

    /// Identity at depth 8; at depth 16 a per-band min-max stretch to 0..255.
    RasterImage to_8bit() const;

private:
    std::size_t sample_index(int col, int row, int band) const {
        return (static_cast<std::size_t>(row) * width_ +
                static_cast<std::size_t>(col)) *
                   bands_ +
               static_cast<std::size_t>(band);
    }

    int width_;
    int height_;
    int bands_;
    int bit_depth_;
    geo::GeoTransform gt_;
    std::string crs_id_;
    std::vector<std::uint8_t> bytes_;
};

/// Binary raster mask: 1 = keep (building interior), 0 = blank.
struct Mask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;  // row-major, values 0/1

    Mask() = default;
    Mask(int w, int h)
        : width(w), height(h),
          bits(static_cast<std::size_t>(w) * h, 0) {}

    std::uint8_t at(int col, int row) const {
        return bits[static_cast<std::size_t>(row) * width + col];
    }
    void set(int col, int row, std::uint8_t v) {
        bits[static_cast<std::size_t>(row) * width + col] = v;
    }
};

}  // namespace solaris::raster
