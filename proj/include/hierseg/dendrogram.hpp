#ifndef HIERSEG_DENDROGRAM_HPP
#define HIERSEG_DENDROGRAM_HPP

#include <cstdint>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hierseg/alpha_tree.hpp"

// JSON form of an alpha-tree:
//
//   { "format": "hierseg.alpha-tree", "version": 1,
//     "pixel_count": N, "node_count": M, "leaf_of_pixel": [...],
//     "root": { "id", "alpha", "area", "min", "max", "children": [...] } }
//
// Children are listed by increasing id; keys keep this order on output.

namespace hierseg {

inline constexpr std::string_view dendrogram_format = "hierseg.alpha-tree";

inline nlohmann::ordered_json dendrogram_to_json(const AlphaTree& tree) {
    using json = nlohmann::ordered_json;
    std::vector<json> objects(tree.node_count());
    for (NodeId n = 0; n < tree.node_count(); ++n) {
        const auto& node = tree.node(n);
        json children = json::array();
        for (auto c : tree.children(n)) children.push_back(std::move(objects[c]));
        objects[n] = json{{"id", n},
                          {"alpha", node.alpha},
                          {"area", node.area},
                          {"min", node.min_value},
                          {"max", node.max_value},
                          {"children", std::move(children)}};
    }
    json doc;
    doc["format"] = dendrogram_format;
    doc["version"] = 1;
    doc["pixel_count"] = tree.pixel_count();
    doc["node_count"] = tree.node_count();
    doc["leaf_of_pixel"] = std::vector<NodeId>(tree.leaf_of_pixel().begin(), tree.leaf_of_pixel().end());
    doc["root"] = std::move(objects[tree.root()]);
    return doc;
}

inline std::string export_dendrogram(const AlphaTree& tree) { return dendrogram_to_json(tree).dump(1) + "\n"; }

inline AlphaTree dendrogram_from_json(const nlohmann::ordered_json& doc) {
    auto fail = [](const std::string& why) -> void { throw invalid_input("malformed dendrogram: " + why); };
    try {
        if (doc.at("format").get<std::string>() != dendrogram_format) fail("unknown format");
        if (doc.at("version").get<int>() != 1) fail("unsupported version");
        const auto node_count = doc.at("node_count").get<std::size_t>();
        auto leaf_of_pixel = doc.at("leaf_of_pixel").get<std::vector<NodeId>>();
        if (leaf_of_pixel.size() != doc.at("pixel_count").get<std::size_t>()) fail("pixel_count mismatch");

        std::vector<AlphaNode> nodes(node_count);
        std::vector<std::uint8_t> seen(node_count, 0);
        std::vector<std::pair<const nlohmann::ordered_json*, NodeId>> stack{{&doc.at("root"), no_node}};
        while (!stack.empty()) {
            auto [obj, parent] = stack.back();
            stack.pop_back();
            const auto id = obj->at("id").get<NodeId>();
            if (id >= node_count || seen[id]) fail("bad or repeated node id " + std::to_string(id));
            seen[id] = 1;
            nodes[id] = {parent, obj->at("alpha").get<Level>(), obj->at("area").get<std::uint64_t>(),
                         obj->at("min").get<Level>(), obj->at("max").get<Level>()};
            for (const auto& child : obj->at("children")) stack.emplace_back(&child, id);
        }
        for (auto s : seen)
            if (!s) fail("node_count exceeds the nodes present");
        return AlphaTree(std::move(nodes), std::move(leaf_of_pixel));
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("malformed dendrogram: ") + e.what());
    }
}

inline AlphaTree import_dendrogram(std::string_view text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_input(std::string("malformed dendrogram: ") + e.what());
    }
    return dendrogram_from_json(doc);
}

inline void write_dendrogram(const AlphaTree& tree, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << export_dendrogram(tree);
    if (!out) throw io_error("write to " + path + " failed");
}

inline AlphaTree read_dendrogram(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return import_dendrogram(text);
}

}  // namespace hierseg

#endif
