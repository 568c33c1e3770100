#include "solaris/raster/ops.hpp"

#include <algorithm>
#include <vector>

namespace solaris::raster {

namespace {

/// First column whose center x is >= threshold, in [0, width]. The center is
/// computed through GeoTransform::pixel_to_world so the comparison is the
/// same one the per-pixel point test would make.
int first_col_at_or_after(const geo::GeoTransform& gt, int width,
                          double threshold) {
    int lo = 0;
    int hi = width;
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (gt.pixel_to_world(mid, 0).x < threshold) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace

Mask rasterize_polygons(std::span<const geo::Polygon> polys,
                        const geo::GeoTransform& gt, int width, int height) {
    Mask mask(width, height);
    if (polys.empty()) return mask;

    std::vector<double> xs;
    for (int row = 0; row < height; ++row) {
        const double py = gt.pixel_to_world(0, row).y;
        std::uint8_t* row_bits =
            mask.bits.data() + static_cast<std::size_t>(row) * width;

        for (const geo::Polygon& poly : polys) {
            // Strictly outside the vertical extent: no edge can cross py.
            if (py < poly.extent().min_y || py > poly.extent().max_y) continue;

            xs.clear();
            geo::detail::ring_crossings(poly.exterior(), py, xs);
            for (const geo::Ring& hole : poly.holes()) {
                geo::detail::ring_crossings(hole, py, xs);
            }
            if (xs.empty()) continue;
            std::sort(xs.begin(), xs.end());

            // Even-odd spans are [xs[2k], xs[2k+1]): a center on the left
            // crossing is inside, on the right crossing outside.
            for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
                const int c0 = first_col_at_or_after(gt, width, xs[k]);
                const int c1 = first_col_at_or_after(gt, width, xs[k + 1]);
                if (c1 > c0) {
                    std::fill(row_bits + c0, row_bits + c1,
                              static_cast<std::uint8_t>(1));
                }
            }
        }
    }
    return mask;
}

RasterImage apply_mask(const RasterImage& img, const Mask& mask,
                       std::uint16_t fill) {
    if (img.width() != mask.width || img.height() != mask.height) {
        throw DimensionMismatch("mask dimensions do not match raster");
    }
    RasterImage out(img.width(), img.height(), img.bands(), img.bit_depth(),
                    img.geotransform(), img.crs_id());
    for (int r = 0; r < img.height(); ++r) {
        for (int c = 0; c < img.width(); ++c) {
            const bool keep = mask.at(c, r) != 0;
            for (int b = 0; b < img.bands(); ++b) {
                out.set_sample(c, r, b, keep ? img.sample(c, r, b) : fill);
            }
        }
    }
    return out;
}

RasterImage downsample(const RasterImage& img, int factor) {
    if (factor < 1) throw FactorMismatch("downsample factor must be >= 1");
    if (factor == 1) return img;
    if (img.width() % factor != 0 || img.height() % factor != 0) {
        throw FactorMismatch("downsample factor must divide width and height");
    }

    const int out_w = img.width() / factor;
    const int out_h = img.height() / factor;
    const geo::GeoTransform gt(img.geotransform().origin_x(),
                               img.geotransform().origin_y(),
                               img.geotransform().pixel_size() * factor);
    RasterImage out(out_w, out_h, img.bands(), img.bit_depth(), gt,
                    img.crs_id());

    const std::uint64_t n = static_cast<std::uint64_t>(factor) * factor;
    for (int r = 0; r < out_h; ++r) {
        for (int c = 0; c < out_w; ++c) {
            for (int b = 0; b < img.bands(); ++b) {
                std::uint64_t sum = 0;
                for (int dr = 0; dr < factor; ++dr) {
                    for (int dc = 0; dc < factor; ++dc) {
                        sum += img.sample(c * factor + dc, r * factor + dr, b);
                    }
                }
                // mean rounded half-up
                out.set_sample(c, r, b,
                               static_cast<std::uint16_t>((2 * sum + n) /
                                                          (2 * n)));
            }
        }
    }
    return out;
}

Mask invert(Mask mask) {
    for (std::uint8_t& b : mask.bits) b = b ? 0 : 1;
    return mask;
}

RasterImage mask_to_image(const Mask& mask, const geo::GeoTransform& gt,
                          std::string crs_id) {
    RasterImage img(mask.width, mask.height, 1, 8, gt, std::move(crs_id));
    for (std::size_t i = 0; i < mask.bits.size(); ++i) {
        img.bytes()[i] = mask.bits[i] ? 255 : 0;
    }
    return img;
}

Mask mask_from_image(const RasterImage& img) {
    if (img.bands() != 1 || img.bit_depth() != 8) {
        throw RasterError("mask image must be single-band 8-bit");
    }
    Mask mask(img.width(), img.height());
    for (std::size_t i = 0; i < mask.bits.size(); ++i) {
        mask.bits[i] = img.bytes()[i] ? 1 : 0;
    }
    return mask;
}

}  // namespace solaris::raster
