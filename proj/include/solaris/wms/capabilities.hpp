#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "solaris/geo/types.hpp"
#include "solaris/wms/errors.hpp"

namespace solaris::wms {

/// BBOX coordinate order for WMS 1.3.0 requests. Depends on the CRS;
/// configurable per endpoint because services disagree in practice.
enum class AxisOrder { xy, yx };

/// Built-in axis orders for the CRSs this pipeline is normally run with
/// (Dutch RD, UTM 32N, Belgian Lambert 72 are easting/northing; geographic
/// EPSG:4326 is latitude-first). Unknown CRSs default to xy.
AxisOrder axis_order_for_crs(const std::string& crs_id);

struct LayerInfo {
    std::string layer_name;
    std::string title;
    std::vector<std::string> crs_ids;
    std::optional<geo::BoundingBox> bbox;
    std::vector<std::string> time_years;  // advertised TIME dimension values
};

struct WmsEndpoint {
    std::string name;
    std::string base_url;
    std::string version = "1.3.0";
    std::vector<LayerInfo> layers;
    std::vector<std::string> formats;
    std::vector<std::string> crs_ids;
    std::optional<long> monthly_budget;
    std::optional<AxisOrder> axis_order;  // overrides the CRS table

    const LayerInfo* find_layer(const std::string& layer_name) const;
};

/// Parses a WMS 1.3.0 GetCapabilities document. Namespace prefixes are
/// ignored, unknown elements skipped, and layer CRS lists inherit from
/// parent layers. Only named layers are returned.
WmsEndpoint parse_capabilities(std::string_view xml);

}  // namespace solaris::wms
