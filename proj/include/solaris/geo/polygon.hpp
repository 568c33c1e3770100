#pragma once

#include <vector>

#include "solaris/geo/types.hpp"

namespace solaris::geo {

/// Ordered vertex list, implicitly closed (the last vertex connects back to
/// the first; no duplicated closing vertex is stored).
using Ring = std::vector<Point>;

/// Signed shoelace area of a ring; positive for counter-clockwise order.
double ring_area(const Ring& ring);

/// Simple polygon with optional holes, even-odd interior semantics.
/// Each ring must have at least three distinct vertices and nonzero area.
class Polygon {
public:
    explicit Polygon(Ring exterior, std::vector<Ring> holes = {});

    const Ring& exterior() const { return exterior_; }
    const std::vector<Ring>& holes() const { return holes_; }

    /// Extent of the exterior ring. crs_id is left empty; the caller's
    /// context defines the CRS.
    const BoundingBox& extent() const { return extent_; }

private:
    Ring exterior_;
    std::vector<Ring> holes_;
    BoundingBox extent_;
};

namespace detail {

/// Crossing of edge (x1,y1)-(x2,y2) with the horizontal line at y, half-open
/// in y so shared vertices are counted once. Both the point predicate and the
/// scanline rasterizer go through this exact expression; keeping them on one
/// code path makes their results identical bit for bit.
inline bool edge_crossing(double x1, double y1, double x2, double y2, double y,
                          double& x_at) {
    if ((y1 > y) == (y2 > y)) return false;
    x_at = x1 + (y - y1) * (x2 - x1) / (y2 - y1);
    return true;
}

/// Appends the x coordinates where the ring's edges cross the horizontal
/// line at y.
void ring_crossings(const Ring& ring, double y, std::vector<double>& out);

}  // namespace detail

/// Even-odd (ray crossing) point-in-polygon test over all rings; points
/// inside holes are outside. Boundary points follow the half-open edge rule:
/// adjacent polygons sharing an edge never both claim a point on it.
bool point_in_polygon(double x, double y, const Polygon& poly);
inline bool point_in_polygon(const Point& p, const Polygon& poly) {
    return point_in_polygon(p.x, p.y, poly);
}

/// True iff the polygon's exterior ring touches, crosses, or contains the
/// box, or the box contains the polygon. Conservative: no false negatives.
bool polygon_intersects_bbox(const Polygon& poly, const BoundingBox& bbox);

/// True iff the exterior rings of the two polygons share at least one point
/// (crossing or containment either way). Holes are ignored.
bool polygons_intersect(const Polygon& a, const Polygon& b);

}  // namespace solaris::geo
