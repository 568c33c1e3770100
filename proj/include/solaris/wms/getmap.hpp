#pragma once

#include <optional>
#include <string>

#include "solaris/geo/types.hpp"
#include "solaris/wms/capabilities.hpp"

namespace solaris::wms {

struct GetMapRequest {
    std::string layer_name;
    std::string crs_id;
    geo::BoundingBox bbox;
    int width_px = 0;   // 1..8192
    int height_px = 0;  // 1..8192
    std::string format = "image/png";
    std::optional<std::string> year;  // emitted as TIME when set
};

/// Deterministic GetMap URL: query keys in the fixed order SERVICE, VERSION,
/// REQUEST, LAYERS, CRS, BBOX, WIDTH, HEIGHT, FORMAT, STYLES, TIME; values
/// percent-encoded; BBOX coordinates fixed to 3 decimals in the endpoint's
/// axis order. Identical inputs yield byte-identical URLs, which downstream
/// code uses as the idempotence key.
std::string build_getmap_url(const WmsEndpoint& ep, const GetMapRequest& req);

/// Percent-encodes everything outside unreserved characters and ":/,".
std::string percent_encode(std::string_view value);

}  // namespace solaris::wms
