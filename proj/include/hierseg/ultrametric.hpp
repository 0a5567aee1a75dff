#ifndef HIERSEG_ULTRAMETRIC_HPP
#define HIERSEG_ULTRAMETRIC_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hierseg/alpha_tree.hpp"
#include "hierseg/graph.hpp"
#include "hierseg/image.hpp"
#include "hierseg/partition.hpp"
#include "hierseg/union_find.hpp"

namespace hierseg {

// Edge map over a pixel adjacency graph: each edge holds the level at which
// its endpoints merge in some hierarchy (ultrametric watershed).
class SaliencyMap {
public:
    SaliencyMap() = default;
    SaliencyMap(EdgeWeightedGraph graph, std::vector<Level> values)
        : graph_(std::move(graph)), values_(std::move(values)) {
        if (values_.size() != graph_.edge_count()) throw invalid_input("one saliency value per edge is required");
    }

    const EdgeWeightedGraph& graph() const noexcept { return graph_; }
    std::span<const Level> values() const noexcept { return values_; }
    Level value(EdgeId e) const { return values_.at(e); }
    std::size_t edge_count() const noexcept { return values_.size(); }
    Level max_value() const noexcept {
        return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
    }

    // The underlying graph re-weighted by the saliency values.
    EdgeWeightedGraph as_graph() const { return graph_.with_edge_weights(values_); }

    friend bool operator==(const SaliencyMap&, const SaliencyMap&) = default;

private:
    EdgeWeightedGraph graph_;
    std::vector<Level> values_;
};

// Doubled raster: (2W-1) x (2H-1), pixel sites at even coordinates.
using KhalimskyImage = ScalarMap;

namespace detail {

inline EdgeWeightedGraph with_vertex_weights_or_zero(const EdgeWeightedGraph& g) {
    if (g.has_vertex_weights()) return g;
    return EdgeWeightedGraph::trusted(g.vertex_count(), std::vector<Edge>(g.edges().begin(), g.edges().end()),
                                      std::vector<Level>(g.vertex_count(), 0));
}

inline void check_vertex(const EdgeWeightedGraph& g, VertexId v) {
    if (v >= g.vertex_count()) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
}

}  // namespace detail

// Each edge receives the merge level of its endpoints in the tree.
inline SaliencyMap saliency_from_tree(const AlphaTree& tree, const EdgeWeightedGraph& graph) {
    if (tree.pixel_count() != graph.vertex_count())
        throw invalid_input("tree covers " + std::to_string(tree.pixel_count()) + " pixels but graph has " +
                            std::to_string(graph.vertex_count()) + " vertices");
    std::vector<Level> values(graph.edge_count());
    const auto edges = graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) values[i] = d_alpha(tree, edges[i].u, edges[i].v);
    return SaliencyMap(graph, std::move(values));
}

// Minimax path value between p and q: edges are added by increasing weight
// until both endpoints fall in one component.
inline Level pass_value(const EdgeWeightedGraph& g, VertexId p, VertexId q) {
    detail::check_vertex(g, p);
    detail::check_vertex(g, q);
    if (p == q) return 0;
    UnionFind uf(g.vertex_count());
    for (EdgeId i : sorted_edge_order(g)) {
        const auto& e = g.edges()[i];
        uf.unite(e.u, e.v);
        if (uf.same(p, q)) return e.weight;
    }
    throw disconnected_graph("no path between the two vertices");
}

inline Level pass_value(const SaliencyMap& map, VertexId p, VertexId q) {
    return pass_value(map.as_graph(), p, q);
}

struct WatershedCheck {
    bool ok = true;
    std::optional<EdgeId> edge;  // first offending edge
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

// Where the minima of an edge map are looked for.
//
// doubled: the map is read on the doubled graph, where every vertex also
// carries a pendant edge of value 0. Every region of the level-0 cut is then
// a minimum at 0, which is how a saliency map built from an alpha-tree is
// laid out, isolated flat zones included.
//
// edges_only: minima are connected sets of equal-valued edges with no
// incident edge of strictly smaller value; isolated vertices are not minima.
enum class MinimaReading { doubled, edges_only };

// An edge map is an ultrametric watershed when (a) every edge value equals the
// pass value between its endpoints and (b) every minimum is valued 0.
// Under the doubled reading (b) always holds, since any positive plateau
// touches a pendant zero edge.
inline WatershedCheck is_ultrametric_watershed(const SaliencyMap& map,
                                               MinimaReading minima = MinimaReading::doubled) {
    const auto& g = map.graph();
    const auto values = map.values();
    if (!is_connected(g)) return {false, std::nullopt, "underlying graph is disconnected"};

    const auto tree = build_alpha_tree(detail::with_vertex_weights_or_zero(map.as_graph()));
    for (EdgeId i = 0; i < values.size(); ++i) {
        const auto& e = g.edges()[i];
        const auto pass = d_alpha(tree, e.u, e.v);
        if (pass != values[i])
            return {false, i,
                    "edge value " + std::to_string(values[i]) + " exceeds its pass value " + std::to_string(pass)};
    }
    if (minima == MinimaReading::doubled) return {};

    // Plateaus: union of equal-valued edges sharing an endpoint.
    const auto adj = build_adjacency(g);
    UnionFind plateau(values.size());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto inc = adj.of(v);
        for (std::size_t a = 1; a < inc.size(); ++a)
            for (std::size_t b = 0; b < a; ++b)
                if (values[inc[a].second] == values[inc[b].second]) plateau.unite(inc[a].second, inc[b].second);
    }
    std::vector<std::uint8_t> minimal(values.size(), 1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto inc = adj.of(v);
        Level lowest = std::numeric_limits<Level>::max();
        for (const auto& [_, e] : inc) lowest = std::min(lowest, values[e]);
        for (const auto& [_, e] : inc)
            if (values[e] > lowest) minimal[plateau.find(e)] = 0;
    }
    for (EdgeId i = 0; i < values.size(); ++i)
        if (values[i] > 0 && minimal[plateau.find(i)])
            return {false, i, "minimum plateau at value " + std::to_string(values[i]) + " is not zero"};
    return {};
}

// Alpha-tree of the edge map (its quasi-flat-zone hierarchy).
inline AlphaTree hierarchy_from_saliency(const SaliencyMap& map) {
    return build_alpha_tree(detail::with_vertex_weights_or_zero(map.as_graph()));
}

// Replaces each edge value by the global range ultrametric between its
// endpoints, then floods every contour whose range does not exceed omega.
// Cutting the result at any level w >= omega yields the (w)-components.
inline SaliencyMap range_filter_saliency(const SaliencyMap& map, std::span<const Level> vertex_weights, Level omega) {
    const auto& g = map.graph();
    if (vertex_weights.size() != g.vertex_count()) throw invalid_input("one vertex weight per vertex is required");
    auto weighted = EdgeWeightedGraph::trusted(g.vertex_count(), std::vector<Edge>(g.edges().begin(), g.edges().end()),
                                               std::vector<Level>(vertex_weights.begin(), vertex_weights.end()));
    const auto tree = build_alpha_tree(weighted.with_edge_weights(map.values()));
    std::vector<Level> values(g.edge_count());
    for (EdgeId i = 0; i < values.size(); ++i) {
        const auto& e = g.edges()[i];
        const auto r = d_omega(tree, e.u, e.v);
        values[i] = r > omega ? r : 0;
    }
    return SaliencyMap(std::move(weighted), std::move(values));
}

// Regions of the map at level lambda: components of the edges valued <= lambda.
inline Partition cut_saliency(const SaliencyMap& map, Level lambda) {
    UnionFind uf(map.graph().vertex_count());
    const auto edges = map.graph().edges();
    for (EdgeId i = 0; i < edges.size(); ++i)
        if (map.value(i) <= lambda) uf.unite(edges[i].u, edges[i].v);
    return Partition::from_union_find(uf);
}

// Interpixel rendering: edge sites carry saliency values, junction sites the
// maximum of their incident edge sites, pixel sites 0.
inline KhalimskyImage render_khalimsky(const SaliencyMap& map, std::size_t width, std::size_t height) {
    const auto& g = map.graph();
    if (width == 0 || height == 0 || g.vertex_count() != width * height)
        throw invalid_input("saliency graph does not match the image dimensions");
    if (g.edge_count() != 2 * width * height - width - height)
        throw invalid_input("saliency graph is not a complete 4-adjacency grid");
    const std::size_t kw = 2 * width - 1;
    const std::size_t kh = 2 * height - 1;
    KhalimskyImage out(kw, kh);
    for (EdgeId i = 0; i < g.edge_count(); ++i) {
        auto [u, v, w] = g.edges()[i];
        if (u > v) std::swap(u, v);
        const std::size_t x = u % width;
        const std::size_t y = u / width;
        if (v == u + 1 && x + 1 < width)
            out.values[(2 * y) * kw + 2 * x + 1] = map.value(i);
        else if (v == u + width)
            out.values[(2 * y + 1) * kw + 2 * x] = map.value(i);
        else
            throw invalid_input("edge " + std::to_string(i) + " does not join 4-adjacent pixels");
    }
    for (std::size_t y = 1; y < kh; y += 2) {
        for (std::size_t x = 1; x < kw; x += 2) {
            const auto at = [&](std::size_t xx, std::size_t yy) { return out.values[yy * kw + xx]; };
            out.values[y * kw + x] =
                std::max({at(x - 1, y), at(x + 1, y), at(x, y - 1), at(x, y + 1)});
        }
    }
    return out;
}

}  // namespace hierseg

#endif
