#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "solaris/raster/image.hpp"

namespace solaris::raster {

/// Decodes a PNG stream (8- or 16-bit, gray or RGB; palette expanded, alpha
/// stripped). PNG carries no georeferencing, so the caller supplies the
/// geotransform and CRS the stream is known to cover.
RasterImage decode_image(std::span<const std::uint8_t> bytes,
                         const geo::GeoTransform& gt, std::string crs_id);

struct EncodedImage {
    std::vector<std::uint8_t> png;
    std::string sidecar_json;
};

/// Lossless PNG plus a georeferencing sidecar with exactly the keys
/// {crs_id, origin_x, origin_y, pixel_size, width, height, bands}.
/// Only 8-bit rasters encode; pass 16-bit data through to_8bit first.
EncodedImage encode_image(const RasterImage& img);

std::string sidecar_json(const RasterImage& img);

}  // namespace solaris::raster
