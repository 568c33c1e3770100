#include "solaris/geo/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace solaris::geo {

namespace {

int distinct_vertices(const Ring& ring) {
    int count = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i; ++j) {
            if (ring[j].x == ring[i].x && ring[j].y == ring[i].y) {
                seen = true;
                break;
            }
        }
        if (!seen) ++count;
    }
    return count;
}

void validate_ring(const Ring& ring, const char* what) {
    if (distinct_vertices(ring) < 3) {
        throw GeoError(std::string("polygon ") + what +
                       " needs at least 3 distinct vertices");
    }
    if (ring_area(ring) == 0.0) {
        throw GeoError(std::string("polygon ") + what + " has zero area");
    }
}

int orientation(const Point& a, const Point& b, const Point& c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Inclusive segment intersection: touching endpoints count.
bool segments_intersect(const Point& p1, const Point& p2, const Point& q1,
                        const Point& q2) {
    const int o1 = orientation(p1, p2, q1);
    const int o2 = orientation(p1, p2, q2);
    const int o3 = orientation(q1, q2, p1);
    const int o4 = orientation(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

bool point_in_ring(double x, double y, const Ring& ring) {
    bool inside = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        double x_at;
        if (detail::edge_crossing(ring[j].x, ring[j].y, ring[i].x, ring[i].y,
                                  y, x_at) &&
            x < x_at) {
            inside = !inside;
        }
    }
    return inside;
}

bool ring_intersects_ring(const Ring& a, const Ring& b) {
    for (std::size_t i = 0, j = a.size() - 1; i < a.size(); j = i++) {
        for (std::size_t k = 0, l = b.size() - 1; k < b.size(); l = k++) {
            if (segments_intersect(a[j], a[i], b[l], b[k])) return true;
        }
    }
    return false;
}

}  // namespace

double ring_area(const Ring& ring) {
    double twice = 0.0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        twice += ring[j].x * ring[i].y - ring[i].x * ring[j].y;
    }
    return twice / 2.0;
}

Polygon::Polygon(Ring exterior, std::vector<Ring> holes)
    : exterior_(std::move(exterior)), holes_(std::move(holes)) {
    validate_ring(exterior_, "exterior ring");
    for (const Ring& hole : holes_) validate_ring(hole, "hole ring");

    extent_.min_x = extent_.min_y = std::numeric_limits<double>::max();
    extent_.max_x = extent_.max_y = std::numeric_limits<double>::lowest();
    auto grow = [this](const Ring& ring) {
        for (const Point& p : ring) {
            extent_.min_x = std::min(extent_.min_x, p.x);
            extent_.min_y = std::min(extent_.min_y, p.y);
            extent_.max_x = std::max(extent_.max_x, p.x);
            extent_.max_y = std::max(extent_.max_y, p.y);
        }
    };
    grow(exterior_);
    for (const Ring& hole : holes_) grow(hole);
}

namespace detail {

void ring_crossings(const Ring& ring, double y, std::vector<double>& out) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        double x_at;
        if (edge_crossing(ring[j].x, ring[j].y, ring[i].x, ring[i].y, y,
                          x_at)) {
            out.push_back(x_at);
        }
    }
}

}  // namespace detail

bool point_in_polygon(double x, double y, const Polygon& poly) {
    bool inside = point_in_ring(x, y, poly.exterior());
    for (const Ring& hole : poly.holes()) {
        if (point_in_ring(x, y, hole)) inside = !inside;
    }
    return inside;
}

bool polygon_intersects_bbox(const Polygon& poly, const BoundingBox& bbox) {
    if (!poly.extent().intersects(bbox)) return false;

    const Ring& ext = poly.exterior();
    for (const Point& v : ext) {
        if (bbox.contains(v.x, v.y)) return true;
    }

    const Point corners[4] = {{bbox.min_x, bbox.min_y},
                              {bbox.max_x, bbox.min_y},
                              {bbox.max_x, bbox.max_y},
                              {bbox.min_x, bbox.max_y}};
    for (const Point& c : corners) {
        if (point_in_ring(c.x, c.y, ext)) return true;
    }

    for (int e = 0; e < 4; ++e) {
        const Point& a = corners[e];
        const Point& b = corners[(e + 1) % 4];
        for (std::size_t i = 0, j = ext.size() - 1; i < ext.size(); j = i++) {
            if (segments_intersect(a, b, ext[j], ext[i])) return true;
        }
    }
    return false;
}

bool polygons_intersect(const Polygon& a, const Polygon& b) {
    if (!a.extent().intersects(b.extent())) return false;
    for (const Point& v : a.exterior()) {
        if (point_in_ring(v.x, v.y, b.exterior())) return true;
    }
    for (const Point& v : b.exterior()) {
        if (point_in_ring(v.x, v.y, a.exterior())) return true;
    }
    return ring_intersects_ring(a.exterior(), b.exterior());
}

}  // namespace solaris::geo
