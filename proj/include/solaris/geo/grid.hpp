#pragma once

#include <string>
#include <vector>

#include "solaris/geo/types.hpp"

namespace solaris::geo {

/// Deterministic tile id: reproducible from the grid parameters and the
/// cell index alone. Reals are formatted with fixed 3 decimals.
std::string tile_id(const std::string& crs_id, const TileGridSpec& spec,
                    long col, long row);

/// Partitions bbox into grid cells, row-major from the north-west corner.
/// Edge tiles are clipped to the bbox, never padded; the union of tile
/// bboxes equals bbox exactly and interiors are pairwise disjoint.
///
/// Every bbox edge must lie on the grid's pixel lattice (an integer number
/// of pixels east/south of the origin, within 1e-9 m), so each clipped tile
/// is a whole number of pixels. Off-lattice extents, or extents west/north
/// of the origin, raise ResolutionMismatch.
std::vector<Tile> make_tile_grid(const BoundingBox& bbox,
                                 const TileGridSpec& spec);

}  // namespace solaris::geo
