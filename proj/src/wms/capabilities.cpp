#include "solaris/wms/capabilities.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace solaris::wms {

namespace pt = boost::property_tree;

namespace {

std::string local_name(const std::string& qualified) {
    const auto pos = qualified.rfind(':');
    return pos == std::string::npos ? qualified : qualified.substr(pos + 1);
}

const pt::ptree* find_child(const pt::ptree& node, const std::string& name) {
    for (const auto& [key, child] : node) {
        if (local_name(key) == name) return &child;
    }
    return nullptr;
}

std::string child_text(const pt::ptree& node, const std::string& name) {
    const pt::ptree* c = find_child(node, name);
    return c ? c->get_value<std::string>() : std::string();
}

std::string attribute(const pt::ptree& node, const std::string& name) {
    const pt::ptree* attrs = find_child(node, "<xmlattr>");
    if (!attrs) return {};
    for (const auto& [key, child] : *attrs) {
        if (local_name(key) == name) return child.get_value<std::string>();
    }
    return {};
}

std::vector<std::string> split_csv_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto b = token.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        const auto e = token.find_last_not_of(" \t\r\n");
        out.push_back(token.substr(b, e - b + 1));
    }
    return out;
}

std::optional<geo::BoundingBox> parse_layer_bbox(const pt::ptree& layer) {
    for (const auto& [key, child] : layer) {
        if (local_name(key) != "BoundingBox") continue;
        geo::BoundingBox box;
        box.crs_id = attribute(child, "CRS");
        try {
            box.min_x = std::stod(attribute(child, "minx"));
            box.min_y = std::stod(attribute(child, "miny"));
            box.max_x = std::stod(attribute(child, "maxx"));
            box.max_y = std::stod(attribute(child, "maxy"));
        } catch (const std::exception&) {
            continue;
        }
        if (box.valid()) return box;
    }
    return std::nullopt;
}

void collect_layers(const pt::ptree& layer_node,
                    std::vector<std::string> inherited_crs,
                    std::vector<LayerInfo>& out) {
    for (const auto& [key, child] : layer_node) {
        if (local_name(key) == "CRS" || local_name(key) == "SRS") {
            const auto crs = child.get_value<std::string>();
            if (!crs.empty() &&
                std::find(inherited_crs.begin(), inherited_crs.end(), crs) ==
                    inherited_crs.end()) {
                inherited_crs.push_back(crs);
            }
        }
    }

    const std::string name = child_text(layer_node, "Name");
    if (!name.empty()) {
        LayerInfo info;
        info.layer_name = name;
        info.title = child_text(layer_node, "Title");
        info.crs_ids = inherited_crs;
        info.bbox = parse_layer_bbox(layer_node);
        for (const auto& [key, child] : layer_node) {
            if (local_name(key) == "Dimension" &&
                attribute(child, "name") == "time") {
                info.time_years = split_csv_list(child.get_value<std::string>());
            }
        }
        out.push_back(std::move(info));
    }

    for (const auto& [key, child] : layer_node) {
        if (local_name(key) == "Layer") {
            collect_layers(child, inherited_crs, out);
        }
    }
}

std::string getmap_online_resource(const pt::ptree& getmap) {
    const pt::ptree* dcp = find_child(getmap, "DCPType");
    if (!dcp) return {};
    const pt::ptree* http = find_child(*dcp, "HTTP");
    if (!http) return {};
    const pt::ptree* get = find_child(*http, "Get");
    if (!get) return {};
    const pt::ptree* online = find_child(*get, "OnlineResource");
    if (!online) return {};
    return attribute(*online, "href");
}

}  // namespace

AxisOrder axis_order_for_crs(const std::string& crs_id) {
    static const std::set<std::string> kYxCrs = {"EPSG:4326"};
    if (kYxCrs.count(crs_id)) return AxisOrder::yx;
    return AxisOrder::xy;
}

const LayerInfo* WmsEndpoint::find_layer(const std::string& layer_name) const {
    for (const LayerInfo& l : layers) {
        if (l.layer_name == layer_name) return &l;
    }
    return nullptr;
}

WmsEndpoint parse_capabilities(std::string_view xml) {
    pt::ptree doc;
    try {
        std::stringstream ss{std::string(xml)};
        pt::read_xml(ss, doc, pt::xml_parser::no_comments);
    } catch (const pt::xml_parser_error& e) {
        throw XmlMalformed(std::string("capabilities XML malformed: ") +
                           e.what());
    }

    const pt::ptree* root = nullptr;
    std::string root_name;
    for (const auto& [key, child] : doc) {
        if (key == "<xmlattr>" || key == "<xmlcomment>") continue;
        root_name = local_name(key);
        root = &child;
        break;
    }
    if (!root || root_name != "WMS_Capabilities") {
        throw NotACapabilitiesDocument("root element is '" + root_name +
                                       "', expected WMS_Capabilities");
    }

    WmsEndpoint ep;
    const std::string version = attribute(*root, "version");
    if (!version.empty()) ep.version = version;

    if (const pt::ptree* service = find_child(*root, "Service")) {
        ep.name = child_text(*service, "Title");
        if (ep.name.empty()) ep.name = child_text(*service, "Name");
    }

    const pt::ptree* capability = find_child(*root, "Capability");
    if (capability) {
        if (const pt::ptree* request = find_child(*capability, "Request")) {
            if (const pt::ptree* getmap = find_child(*request, "GetMap")) {
                for (const auto& [key, child] : *getmap) {
                    if (local_name(key) == "Format") {
                        ep.formats.push_back(child.get_value<std::string>());
                    }
                }
                ep.base_url = getmap_online_resource(*getmap);
            }
        }
        for (const auto& [key, child] : *capability) {
            if (local_name(key) == "Layer") {
                collect_layers(child, {}, ep.layers);
            }
        }
    }

    if (ep.layers.empty()) {
        throw NoLayers("capabilities document advertises no named layers");
    }

    // Keep the first occurrence when a name is advertised twice.
    std::set<std::string> seen;
    std::erase_if(ep.layers, [&seen](const LayerInfo& l) {
        return !seen.insert(l.layer_name).second;
    });

    std::set<std::string> crs_set;
    for (const LayerInfo& l : ep.layers) {
        crs_set.insert(l.crs_ids.begin(), l.crs_ids.end());
    }
    ep.crs_ids.assign(crs_set.begin(), crs_set.end());
    return ep;
}

}  // namespace solaris::wms
