#include "solaris/geo/types.hpp"

#include <cmath>

namespace solaris::geo {

std::pair<long, long> GeoTransform::world_to_pixel(double x, double y) const {
    const long col = static_cast<long>(std::floor((x - origin_x_) / pixel_size_));
    const long row = static_cast<long>(std::floor((origin_y_ - y) / pixel_size_));
    return {col, row};
}

}  // namespace solaris::geo
