#pragma once

#include <span>

#include "solaris/geo/polygon.hpp"
#include "solaris/raster/image.hpp"

namespace solaris::raster {

/// Scanline rasterization of polygons onto the pixel grid described by gt.
/// A bit is 1 iff the pixel center is inside any polygon under the even-odd
/// half-open rule; the result equals evaluating point_in_polygon at every
/// pixel center, bit for bit.
Mask rasterize_polygons(std::span<const geo::Polygon> polys,
                        const geo::GeoTransform& gt, int width, int height);

/// Keeps samples where the mask bit is 1, replaces the rest with fill.
RasterImage apply_mask(const RasterImage& img, const Mask& mask,
                       std::uint16_t fill = 0);

/// Integer-factor box downsampling; each output sample is the mean of a
/// factor x factor block, rounded half-up. Ground extent is unchanged
/// (origin kept, pixel size multiplied).
RasterImage downsample(const RasterImage& img, int factor);

Mask invert(Mask mask);

/// Masks are stored on disk as single-band 8-bit PNGs with values {0,255}.
RasterImage mask_to_image(const Mask& mask, const geo::GeoTransform& gt,
                          std::string crs_id);
Mask mask_from_image(const RasterImage& img);

}  // namespace solaris::raster
