#ifndef HIERSEG_GRAPH_HPP
#define HIERSEG_GRAPH_HPP

#include <algorithm>
#include <concepts>
#include <functional>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hierseg/image.hpp"
#include "hierseg/partition.hpp"
#include "hierseg/types.hpp"
#include "hierseg/union_find.hpp"

namespace hierseg {

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    Level weight = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected simple graph with integer edge weights and optional vertex weights.
class EdgeWeightedGraph {
public:
    EdgeWeightedGraph() = default;

    // Checked constructor: rejects self-loops, out-of-range endpoints,
    // duplicate unordered pairs and mis-sized vertex weights.
    EdgeWeightedGraph(std::size_t vertex_count, std::vector<Edge> edges,
                      std::optional<std::vector<Level>> vertex_weights = std::nullopt)
        : vertex_count_(vertex_count), edges_(std::move(edges)), vertex_weights_(std::move(vertex_weights)) {
        validate();
    }

    // Skips validation; for builders whose output is correct by construction.
    static EdgeWeightedGraph trusted(std::size_t vertex_count, std::vector<Edge> edges,
                                     std::optional<std::vector<Level>> vertex_weights = std::nullopt) {
        EdgeWeightedGraph g;
        g.vertex_count_ = vertex_count;
        g.edges_ = std::move(edges);
        g.vertex_weights_ = std::move(vertex_weights);
        return g;
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    bool has_vertex_weights() const noexcept { return vertex_weights_.has_value(); }
    std::span<const Level> vertex_weights() const {
        if (!vertex_weights_) throw invalid_input("graph has no vertex weights");
        return *vertex_weights_;
    }

    // Same topology and vertex weights, new edge weights (one per edge).
    EdgeWeightedGraph with_edge_weights(std::span<const Level> weights) const {
        if (weights.size() != edges_.size()) throw invalid_input("edge weight count mismatch");
        auto edges = edges_;
        for (std::size_t i = 0; i < edges.size(); ++i) edges[i].weight = weights[i];
        return trusted(vertex_count_, std::move(edges), vertex_weights_);
    }

    Level max_edge_weight() const noexcept {
        Level m = 0;
        for (const auto& e : edges_) m = std::max(m, e.weight);
        return m;
    }

    friend bool operator==(const EdgeWeightedGraph&, const EdgeWeightedGraph&) = default;

private:
    void validate() const {
        if (vertex_weights_ && vertex_weights_->size() != vertex_count_)
            throw invalid_input("vertex weight count does not match vertex count");
        std::vector<std::pair<VertexId, VertexId>> pairs;
        pairs.reserve(edges_.size());
        for (const auto& e : edges_) {
            if (e.u == e.v) throw invalid_input("self-loop on vertex " + std::to_string(e.u));
            if (e.u >= vertex_count_ || e.v >= vertex_count_) throw invalid_input("edge endpoint out of range");
            pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        }
        std::sort(pairs.begin(), pairs.end());
        if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
            throw invalid_input("duplicate edge");
    }

    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::vector<Level>> vertex_weights_;
};

// Compressed incidence lists: for vertex v, entries [offsets[v], offsets[v+1])
// of `incident` hold (neighbour, edge id).
struct Adjacency {
    std::vector<std::size_t> offsets;
    std::vector<std::pair<VertexId, EdgeId>> incident;

    std::span<const std::pair<VertexId, EdgeId>> of(VertexId v) const {
        return std::span(incident).subspan(offsets[v], offsets[v + 1] - offsets[v]);
    }
};

inline Adjacency build_adjacency(const EdgeWeightedGraph& g) {
    Adjacency adj;
    adj.offsets.assign(g.vertex_count() + 1, 0);
    for (const auto& e : g.edges()) {
        ++adj.offsets[e.u + 1];
        ++adj.offsets[e.v + 1];
    }
    std::partial_sum(adj.offsets.begin(), adj.offsets.end(), adj.offsets.begin());
    adj.incident.resize(adj.offsets.back());
    auto cursor = adj.offsets;
    for (EdgeId i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        adj.incident[cursor[e.u]++] = {e.v, i};
        adj.incident[cursor[e.v]++] = {e.u, i};
    }
    return adj;
}

template <class D>
concept Dissimilarity = requires(const D& d, Level a, Level b) {
    { d(a, b) } -> std::convertible_to<Level>;
};

struct AbsoluteDifference {
    constexpr Level operator()(Level a, Level b) const noexcept { return a > b ? a - b : b - a; }
};

// 4-adjacency graph over a w x h raster of vertex weights. Edges are
// enumerated in row-major pixel order, the right neighbour before the lower one.
template <Dissimilarity D = AbsoluteDifference>
EdgeWeightedGraph build_grid_graph(std::size_t w, std::size_t h, std::span<const Level> values,
                                   const D& dissimilarity = {}) {
    if (w == 0 || h == 0) throw invalid_input("image must be non-empty");
    if (values.size() != w * h) throw invalid_input("raster size mismatch");
    std::vector<Edge> edges;
    edges.reserve(2 * w * h - w - h);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            const auto p = static_cast<VertexId>(y * w + x);
            if (x + 1 < w) edges.push_back({p, p + 1, static_cast<Level>(dissimilarity(values[p], values[p + 1]))});
            if (y + 1 < h) {
                const auto q = static_cast<VertexId>(p + w);
                edges.push_back({p, q, static_cast<Level>(dissimilarity(values[p], values[q]))});
            }
        }
    }
    return EdgeWeightedGraph::trusted(w * h, std::move(edges), std::vector<Level>(values.begin(), values.end()));
}

template <Dissimilarity D = AbsoluteDifference>
EdgeWeightedGraph build_pixel_graph(const GridImage& image, const D& dissimilarity = {}) {
    if (image.empty()) throw invalid_input("image must be non-empty");
    return build_grid_graph(image.width(), image.height(), image.values(), dissimilarity);
}

// Edge ids sorted by increasing weight, ties kept in original index order.
inline std::vector<EdgeId> sorted_edge_order(const EdgeWeightedGraph& g) {
    const auto edges = g.edges();
    std::vector<EdgeId> order(edges.size());
    if (edges.empty()) return order;
    const std::size_t max_w = g.max_edge_weight();
    if (max_w <= 2 * edges.size() + 65536) {
        // counting sort
        std::vector<std::size_t> start(max_w + 2, 0);
        for (const auto& e : edges) ++start[e.weight + 1];
        std::partial_sum(start.begin(), start.end(), start.begin());
        for (EdgeId i = 0; i < edges.size(); ++i) order[start[edges[i].weight]++] = i;
    } else {
        std::iota(order.begin(), order.end(), EdgeId{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](EdgeId a, EdgeId b) { return edges[a].weight < edges[b].weight; });
    }
    return order;
}

inline bool is_connected(const EdgeWeightedGraph& g) {
    if (g.vertex_count() == 0) return true;
    UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges()) uf.unite(e.u, e.v);
    return uf.set_count() == 1;
}

// Components of the subgraph keeping the edges of weight <= alpha.
inline Partition alpha_cc_partition(const EdgeWeightedGraph& g, Level alpha) {
    UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges())
        if (e.weight <= alpha) uf.unite(e.u, e.v);
    return Partition::from_union_find(uf);
}

// Maximal 4-connected iso-intensity components (0-connected components).
inline Partition flat_zones(const GridImage& image) {
    if (image.empty()) throw invalid_input("image must be non-empty");
    const std::size_t w = image.width();
    UnionFind uf(image.size());
    for (std::size_t p = 0; p < image.size(); ++p) {
        const auto v = static_cast<VertexId>(p);
        if ((p + 1) % w != 0 && image[p] == image[p + 1]) uf.unite(v, v + 1);
        if (p + w < image.size() && image[p] == image[p + w]) uf.unite(v, static_cast<VertexId>(p + w));
    }
    return Partition::from_union_find(uf);
}

// Kruskal's greedy spanning tree; edges are scanned by (weight, index).
inline std::vector<Edge> kruskal_mst(const EdgeWeightedGraph& g) {
    std::vector<Edge> tree;
    if (g.vertex_count() == 0) return tree;
    tree.reserve(g.vertex_count() - 1);
    UnionFind uf(g.vertex_count());
    for (EdgeId i : sorted_edge_order(g)) {
        const auto& e = g.edges()[i];
        const auto a = uf.find(e.u);
        const auto b = uf.find(e.v);
        if (a == b) continue;
        uf.link(a, b);
        tree.push_back(e);
        if (tree.size() + 1 == g.vertex_count()) break;
    }
    if (tree.size() + 1 != g.vertex_count()) throw disconnected_graph("no spanning tree: graph is disconnected");
    return tree;
}

// Adds a twin p' for every vertex p, linked to p by an edge of weight 0 and
// carrying f(p') = f(p). Twins are numbered n..2n-1.
inline EdgeWeightedGraph double_graph(const EdgeWeightedGraph& g) {
    const auto f = g.vertex_weights();
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.reserve(edges.size() + n);
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(n + i), AbsoluteDifference{}(f[i], f[i])});
    std::vector<Level> weights(f.begin(), f.end());
    weights.insert(weights.end(), f.begin(), f.end());
    return EdgeWeightedGraph::trusted(2 * n, std::move(edges), std::move(weights));
}

// One vertex per edge of g, weighted by that edge's weight; two vertices are
// adjacent when their edges share an endpoint. Output edges carry weight 0.
inline EdgeWeightedGraph line_graph(const EdgeWeightedGraph& g) {
    const auto adj = build_adjacency(g);
    std::vector<Edge> edges;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto inc = adj.of(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                edges.push_back({std::min(inc[i].second, inc[j].second), std::max(inc[i].second, inc[j].second), 0});
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    std::vector<Level> weights;
    weights.reserve(g.edge_count());
    for (const auto& e : g.edges()) weights.push_back(e.weight);
    return EdgeWeightedGraph::trusted(g.edge_count(), std::move(edges), std::move(weights));
}

namespace detail {

// Marks plateaus (connected sets of equal vertex weight) with no neighbour
// strictly below (Compare = less) or above (Compare = greater).
template <class Compare>
std::vector<std::uint8_t> regional_extrema(const EdgeWeightedGraph& g, Compare beyond) {
    const auto f = g.vertex_weights();
    const std::size_t n = g.vertex_count();
    UnionFind uf(n);
    for (const auto& e : g.edges())
        if (f[e.u] == f[e.v]) uf.unite(e.u, e.v);
    std::vector<std::uint8_t> extremal(n, 1);
    for (const auto& e : g.edges()) {
        if (beyond(f[e.v], f[e.u])) extremal[uf.find(e.u)] = 0;
        if (beyond(f[e.u], f[e.v])) extremal[uf.find(e.v)] = 0;
    }
    std::vector<std::uint8_t> mask(n);
    for (VertexId v = 0; v < n; ++v) mask[v] = extremal[uf.find(v)];
    return mask;
}

}  // namespace detail

inline std::vector<std::uint8_t> regional_minima(const EdgeWeightedGraph& g) {
    return detail::regional_extrema(g, std::less<Level>{});
}

inline std::vector<std::uint8_t> regional_maxima(const EdgeWeightedGraph& g) {
    return detail::regional_extrema(g, std::greater<Level>{});
}

}  // namespace hierseg

#endif
