#include "solaris/geo/grid.hpp"

#include <cmath>
#include <cstdio>

namespace solaris::geo {

namespace {

constexpr double kLatticeTolM = 1e-9;

/// Offset in meters from the grid origin, converted to whole pixels.
long snap_to_pixels(double offset_m, double resolution, const char* edge) {
    const long px = std::llround(offset_m / resolution);
    if (std::fabs(offset_m - static_cast<double>(px) * resolution) >
        kLatticeTolM) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "bbox %s edge is not a whole number of pixels from the "
                      "grid origin (offset %.9f m at %.6f m/px)",
                      edge, offset_m, resolution);
        throw ResolutionMismatch(buf);
    }
    return px;
}

}  // namespace

std::string tile_id(const std::string& crs_id, const TileGridSpec& spec,
                    long col, long row) {
    char buf[192];
    std::snprintf(buf, sizeof(buf), "%.3f_%.3f_%.3f_%d_c%ldr%ld",
                  spec.origin_x, spec.origin_y, spec.resolution, spec.tile_px,
                  col, row);
    return crs_id + "_" + buf;
}

std::vector<Tile> make_tile_grid(const BoundingBox& bbox,
                                 const TileGridSpec& spec) {
    if (!spec.valid()) {
        throw GeoError("tile grid spec: tile_px and resolution must be positive");
    }
    if (bbox.crs_id.empty()) throw EmptyExtent("bbox has no crs_id");
    if (!(bbox.max_x > bbox.min_x) || !(bbox.max_y > bbox.min_y)) {
        throw EmptyExtent("bbox has zero or negative extent");
    }

    const double res = spec.resolution;
    // bbox corners in grid pixel coordinates (x east, y south of origin).
    const long bx0 = snap_to_pixels(bbox.min_x - spec.origin_x, res, "west");
    const long bx1 = snap_to_pixels(bbox.max_x - spec.origin_x, res, "east");
    const long by0 = snap_to_pixels(spec.origin_y - bbox.max_y, res, "north");
    const long by1 = snap_to_pixels(spec.origin_y - bbox.min_y, res, "south");
    if (bx0 < 0 || by0 < 0) {
        throw ResolutionMismatch(
            "bbox extends west or north of the grid origin");
    }

    const long t = spec.tile_px;
    const long col0 = bx0 / t;
    const long col1 = (bx1 - 1) / t;
    const long row0 = by0 / t;
    const long row1 = (by1 - 1) / t;

    std::vector<Tile> tiles;
    tiles.reserve(static_cast<std::size_t>((col1 - col0 + 1) *
                                           (row1 - row0 + 1)));
    for (long row = row0; row <= row1; ++row) {
        const long py0 = std::max(row * t, by0);
        const long py1 = std::min((row + 1) * t, by1);
        for (long col = col0; col <= col1; ++col) {
            const long px0 = std::max(col * t, bx0);
            const long px1 = std::min((col + 1) * t, bx1);

            Tile tile;
            tile.col = col;
            tile.row = row;
            tile.width_px = static_cast<int>(px1 - px0);
            tile.height_px = static_cast<int>(py1 - py0);
            // Reuse the input edges on clipped sides so the union of tile
            // bboxes reproduces bbox bit for bit.
            tile.bbox.min_x = (px0 == bx0)
                                  ? bbox.min_x
                                  : spec.origin_x + static_cast<double>(px0) * res;
            tile.bbox.max_x = (px1 == bx1)
                                  ? bbox.max_x
                                  : spec.origin_x + static_cast<double>(px1) * res;
            tile.bbox.max_y = (py0 == by0)
                                  ? bbox.max_y
                                  : spec.origin_y - static_cast<double>(py0) * res;
            tile.bbox.min_y = (py1 == by1)
                                  ? bbox.min_y
                                  : spec.origin_y - static_cast<double>(py1) * res;
            tile.bbox.crs_id = bbox.crs_id;
            tile.tile_id = tile_id(bbox.crs_id, spec, col, row);
            tiles.push_back(std::move(tile));
        }
    }
    return tiles;
}

}  // namespace solaris::geo
