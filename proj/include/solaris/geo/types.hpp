#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace solaris::geo {

struct GeoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Zero-area or otherwise degenerate extent.
struct EmptyExtent : GeoError {
    using GeoError::GeoError;
};

/// Extent not representable in whole pixels on the grid's pixel lattice.
struct ResolutionMismatch : GeoError {
    using GeoError::GeoError;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Axis-aligned extent in a projected CRS with meter units. The CRS is an
/// opaque identifier; geometries combined in one operation must share it.
struct BoundingBox {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;
    std::string crs_id;

    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }

    bool valid() const {
        return max_x > min_x && max_y > min_y && !crs_id.empty();
    }

    bool contains(double x, double y) const {
        return x >= min_x && x <= max_x && y >= min_y && y <= max_y;
    }

    bool intersects(const BoundingBox& other) const {
        return min_x <= other.max_x && other.min_x <= max_x &&
               min_y <= other.max_y && other.min_y <= max_y;
    }
};

/// Tiling scheme: square tiles of tile_px pixels at a fixed ground
/// resolution, anchored at (origin_x, origin_y) and extending east and south.
struct TileGridSpec {
    double origin_x = 0.0;  // grid west edge
    double origin_y = 0.0;  // grid north edge
    int tile_px = 0;
    double resolution = 0.0;  // meters per pixel

    double tile_edge_m() const { return tile_px * resolution; }
    bool valid() const { return tile_px > 0 && resolution > 0.0; }
};

/// One grid cell clipped to the requested extent. Edge tiles may be smaller
/// than tile_px; bbox dimensions always equal pixel dims times resolution.
struct Tile {
    long col = 0;
    long row = 0;
    BoundingBox bbox;
    int width_px = 0;
    int height_px = 0;
    std::string tile_id;
};

/// North-up affine mapping between pixel indices and world coordinates.
/// Square pixels only; world coordinates of a pixel refer to its center.
class GeoTransform {
public:
    GeoTransform() = default;
    GeoTransform(double origin_x, double origin_y, double pixel_size)
        : origin_x_(origin_x), origin_y_(origin_y), pixel_size_(pixel_size) {
        if (pixel_size_ <= 0.0) {
            throw GeoError("GeoTransform: pixel_size must be positive");
        }
    }

    double origin_x() const { return origin_x_; }
    double origin_y() const { return origin_y_; }
    double pixel_size() const { return pixel_size_; }

    /// Center of pixel (col, row).
    Point pixel_to_world(long col, long row) const {
        return {origin_x_ + (static_cast<double>(col) + 0.5) * pixel_size_,
                origin_y_ - (static_cast<double>(row) + 0.5) * pixel_size_};
    }

    /// Pixel containing (x, y). Out-of-range points yield out-of-range
    /// indices; callers clip.
    std::pair<long, long> world_to_pixel(double x, double y) const;

private:
    double origin_x_ = 0.0;
    double origin_y_ = 0.0;
    double pixel_size_ = 1.0;
};

}  // namespace solaris::geo
