#ifndef HIERSEG_AREA_FILTER_HPP
#define HIERSEG_AREA_FILTER_HPP

#include <cstdint>
#include <vector>

#include "hierseg/alpha_tree.hpp"
#include "hierseg/graph.hpp"
#include "hierseg/ultrametric.hpp"
#include "hierseg/union_find.hpp"

namespace hierseg {

// Area filtering of a hierarchy through its saliency map.
//
// The Kruskal merges of the saliency are replayed in order. A merge keeps its
// level only when both merged regions already hold at least min_area pixels;
// any other merge happens at level 0. The filtered tree is the alpha-tree of
// the re-valued spanning tree, so every region of every cut, level 0 included,
// has at least min_area pixels (unless the whole image is smaller). `graph`
// is the adjacency the tree was built on and fixes which regions touch.
inline AlphaTree area_filter(const AlphaTree& tree, const EdgeWeightedGraph& graph, std::uint64_t min_area) {
    if (min_area == 0) throw invalid_input("min_area must be positive");
    const auto saliency = saliency_from_tree(tree, graph).as_graph();
    const std::size_t n = saliency.vertex_count();

    UnionFind uf(n);
    std::vector<std::uint64_t> area(n, 1);
    std::vector<Edge> kept;
    kept.reserve(n - 1);
    for (EdgeId i : sorted_edge_order(saliency)) {
        const auto& e = saliency.edges()[i];
        const auto a = uf.find(e.u);
        const auto b = uf.find(e.v);
        if (a == b) continue;
        const bool relevant = area[a] >= min_area && area[b] >= min_area;
        kept.push_back({e.u, e.v, relevant ? e.weight : Level{0}});
        const auto r = uf.link(a, b);
        area[r] = area[a] + area[b];
    }
    const auto f = graph.vertex_weights();
    return build_alpha_tree(
        EdgeWeightedGraph::trusted(n, std::move(kept), std::vector<Level>(f.begin(), f.end())));
}

}  // namespace hierseg

#endif
