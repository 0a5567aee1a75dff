#ifndef HIERSEG_ALPHA_TREE_HPP
#define HIERSEG_ALPHA_TREE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hierseg/graph.hpp"
#include "hierseg/partition.hpp"
#include "hierseg/types.hpp"
#include "hierseg/union_find.hpp"

namespace hierseg {

struct AlphaNode {
    NodeId parent = no_node;  // no_node for the root
    Level alpha = 0;          // merge level
    std::uint64_t area = 0;   // pixel count
    Level min_value = 0;
    Level max_value = 0;

    Level range() const noexcept { return max_value - min_value; }
    friend bool operator==(const AlphaNode&, const AlphaNode&) = default;
};

// Single-linkage dendrogram of the alpha-connected components of a graph.
//
// The tree is canonical: leaves are the 0-connected components (alpha 0),
// alpha strictly increases from child to parent, and nodes are numbered by
// increasing (alpha, smallest member pixel). Hence every parent id is larger
// than its children's ids and the root is the last node.
class AlphaTree {
public:
    AlphaTree() = default;

    // Checked constructor; validates every structural invariant.
    AlphaTree(std::vector<AlphaNode> nodes, std::vector<NodeId> leaf_of_pixel)
        : nodes_(std::move(nodes)), leaf_of_pixel_(std::move(leaf_of_pixel)) {
        build_children();
        validate();
    }

    static AlphaTree trusted(std::vector<AlphaNode> nodes, std::vector<NodeId> leaf_of_pixel) {
        AlphaTree t;
        t.nodes_ = std::move(nodes);
        t.leaf_of_pixel_ = std::move(leaf_of_pixel);
        t.build_children();
        return t;
    }

    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t pixel_count() const noexcept { return leaf_of_pixel_.size(); }
    std::span<const AlphaNode> nodes() const noexcept { return nodes_; }
    const AlphaNode& node(NodeId n) const { return nodes_.at(n); }
    NodeId root() const noexcept { return static_cast<NodeId>(nodes_.size() - 1); }
    NodeId leaf_of(VertexId p) const { return leaf_of_pixel_.at(p); }
    std::span<const NodeId> leaf_of_pixel() const noexcept { return leaf_of_pixel_; }

    std::span<const NodeId> children(NodeId n) const {
        return std::span(children_).subspan(child_offsets_[n], child_offsets_[n + 1] - child_offsets_[n]);
    }
    bool is_leaf(NodeId n) const { return child_offsets_[n] == child_offsets_[n + 1]; }
    std::size_t leaf_count() const noexcept {
        std::size_t c = 0;
        for (NodeId n = 0; n < nodes_.size(); ++n) c += is_leaf(n);
        return c;
    }

    NodeId lowest_common_ancestor(NodeId a, NodeId b) const {
        while (a != b) {
            if (a < b)
                a = nodes_[a].parent;
            else
                b = nodes_[b].parent;
        }
        return a;
    }

    // Pixels of each node's subtree, indexed by node id.
    std::vector<std::vector<VertexId>> pixel_sets() const {
        std::vector<std::vector<VertexId>> sets(nodes_.size());
        for (VertexId p = 0; p < leaf_of_pixel_.size(); ++p) sets[leaf_of_pixel_[p]].push_back(p);
        for (NodeId n = 0; n + 1 < nodes_.size(); ++n) {
            auto& dst = sets[nodes_[n].parent];
            dst.insert(dst.end(), sets[n].begin(), sets[n].end());
        }
        for (auto& s : sets) std::sort(s.begin(), s.end());
        return sets;
    }

    friend bool operator==(const AlphaTree& a, const AlphaTree& b) {
        return a.nodes_ == b.nodes_ && a.leaf_of_pixel_ == b.leaf_of_pixel_;
    }

private:
    void build_children() {
        const std::size_t n = nodes_.size();
        child_offsets_.assign(n + 1, 0);
        for (const auto& node : nodes_)
            if (node.parent != no_node && node.parent < n) ++child_offsets_[node.parent + 1];
        std::partial_sum(child_offsets_.begin(), child_offsets_.end(), child_offsets_.begin());
        children_.resize(child_offsets_.back());
        auto cursor = child_offsets_;
        for (NodeId c = 0; c < n; ++c) {
            const auto p = nodes_[c].parent;
            if (p != no_node && p < n) children_[cursor[p]++] = c;
        }
    }

    void validate() const {
        auto fail = [](const std::string& why) { throw invalid_input("invalid alpha-tree: " + why); };
        const std::size_t n = nodes_.size();
        if (n == 0) fail("no nodes");
        if (leaf_of_pixel_.empty()) fail("no pixels");
        for (NodeId i = 0; i < n; ++i) {
            const auto& node = nodes_[i];
            if (i + 1 == n) {
                if (node.parent != no_node) fail("last node must be the root");
            } else {
                if (node.parent == no_node || node.parent >= n || node.parent <= i)
                    fail("node " + std::to_string(i) + " has an invalid parent");
                if (nodes_[node.parent].alpha <= node.alpha)
                    fail("alpha must strictly increase towards the root at node " + std::to_string(i));
            }
            if (node.min_value > node.max_value) fail("min exceeds max at node " + std::to_string(i));
            if (is_leaf(i) != (node.alpha == 0)) fail("leaves, and only leaves, have alpha 0");
        }
        std::vector<std::uint64_t> leaf_area(n, 0);
        std::vector<VertexId> first(n, no_node);
        for (VertexId p = 0; p < leaf_of_pixel_.size(); ++p) {
            const auto l = leaf_of_pixel_[p];
            if (l >= n || !is_leaf(l)) fail("pixel " + std::to_string(p) + " is not mapped to a leaf");
            ++leaf_area[l];
            if (first[l] == no_node) first[l] = p;
        }
        for (NodeId i = 0; i < n; ++i) {
            const auto& node = nodes_[i];
            if (is_leaf(i)) {
                if (node.area != leaf_area[i] || node.area == 0) fail("leaf area mismatch at node " + std::to_string(i));
                continue;
            }
            std::uint64_t area = 0;
            Level lo = node.max_value, hi = node.min_value;
            for (auto c : children(i)) {
                area += nodes_[c].area;
                lo = std::min(lo, nodes_[c].min_value);
                hi = std::max(hi, nodes_[c].max_value);
                first[i] = std::min(first[i], first[c]);
            }
            if (children(i).size() < 2) fail("internal node " + std::to_string(i) + " has fewer than two children");
            if (area != node.area) fail("area mismatch at node " + std::to_string(i));
            if (lo != node.min_value || hi != node.max_value) fail("value range mismatch at node " + std::to_string(i));
        }
        for (NodeId i = 1; i < n; ++i)
            if (std::tie(nodes_[i - 1].alpha, first[i - 1]) >= std::tie(nodes_[i].alpha, first[i]))
                fail("nodes are not in canonical order");
    }

    std::vector<AlphaNode> nodes_;
    std::vector<NodeId> leaf_of_pixel_;
    std::vector<std::size_t> child_offsets_;
    std::vector<NodeId> children_;
};

// Kruskal construction: zero-weight edges first form the leaves, then every
// union of two components creates a binary merge node, and equal-alpha chains
// are collapsed into canonical nodes. Quasi-linear in the edge count.
inline AlphaTree build_alpha_tree(const EdgeWeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw invalid_input("graph has no vertices");
    const auto f = g.vertex_weights();
    const auto edges = g.edges();
    const auto order = sorted_edge_order(g);

    UnionFind uf(n);
    std::size_t k = 0;
    for (; k < order.size() && edges[order[k]].weight == 0; ++k) uf.unite(edges[order[k]].u, edges[order[k]].v);

    struct Binary {
        NodeId parent;
        Level alpha;
        std::uint64_t area;
        Level lo, hi;
        VertexId first;
    };
    std::vector<Binary> bin;
    bin.reserve(2 * uf.set_count());
    std::vector<NodeId> node_of_root(n, no_node);
    std::vector<NodeId> leaf_of_pixel(n);
    for (VertexId p = 0; p < n; ++p) {
        const auto r = uf.find(p);
        auto& id = node_of_root[r];
        if (id == no_node) {
            id = static_cast<NodeId>(bin.size());
            bin.push_back({no_node, 0, 0, f[p], f[p], p});
        }
        auto& leaf = bin[id];
        ++leaf.area;
        leaf.lo = std::min(leaf.lo, f[p]);
        leaf.hi = std::max(leaf.hi, f[p]);
        leaf_of_pixel[p] = id;
    }

    for (; k < order.size() && uf.set_count() > 1; ++k) {
        const auto& e = edges[order[k]];
        const auto a = uf.find(e.u);
        const auto b = uf.find(e.v);
        if (a == b) continue;
        const auto na = node_of_root[a];
        const auto nb = node_of_root[b];
        const auto m = static_cast<NodeId>(bin.size());
        bin.push_back({no_node, e.weight, bin[na].area + bin[nb].area, std::min(bin[na].lo, bin[nb].lo),
                       std::max(bin[na].hi, bin[nb].hi), std::min(bin[na].first, bin[nb].first)});
        bin[na].parent = m;
        bin[nb].parent = m;
        node_of_root[uf.link(a, b)] = m;
    }
    if (uf.set_count() != 1) throw disconnected_graph("alpha-tree needs a connected graph");

    // Collapse: a binary node whose parent has the same alpha dissolves into it.
    const std::size_t nb = bin.size();
    std::vector<NodeId> rep(nb);
    for (std::size_t i = nb; i-- > 0;) {
        const auto p = bin[i].parent;
        rep[i] = (p != no_node && bin[p].alpha == bin[i].alpha) ? rep[p] : static_cast<NodeId>(i);
    }
    std::vector<NodeId> kept;
    kept.reserve(nb);
    for (NodeId i = 0; i < nb; ++i)
        if (rep[i] == i) kept.push_back(i);
    std::sort(kept.begin(), kept.end(), [&](NodeId a, NodeId b) {
        return std::tie(bin[a].alpha, bin[a].first) < std::tie(bin[b].alpha, bin[b].first);
    });
    std::vector<NodeId> new_id(nb, no_node);
    for (NodeId i = 0; i < kept.size(); ++i) new_id[kept[i]] = i;

    std::vector<AlphaNode> nodes(kept.size());
    for (NodeId i = 0; i < kept.size(); ++i) {
        const auto& b = bin[kept[i]];
        nodes[i] = {b.parent == no_node ? no_node : new_id[rep[b.parent]], b.alpha, b.area, b.lo, b.hi};
    }
    for (auto& l : leaf_of_pixel) l = new_id[l];
    return AlphaTree::trusted(std::move(nodes), std::move(leaf_of_pixel));
}

namespace detail {

// Maps every pixel to the highest ancestor of its leaf satisfying a predicate
// that is inherited by descendants. A leaf that fails the predicate stands for itself.
template <class Qualifies>
Partition highest_qualifying_cut(const AlphaTree& tree, Qualifies qualifies) {
    const auto nodes = tree.nodes();
    std::vector<std::uint32_t> sel(nodes.size());
    for (std::size_t i = nodes.size(); i-- > 0;) {
        const auto p = nodes[i].parent;
        sel[i] = (p != no_node && qualifies(nodes[p])) ? sel[p] : static_cast<std::uint32_t>(i);
    }
    std::vector<std::uint32_t> keys(tree.pixel_count());
    for (VertexId p = 0; p < keys.size(); ++p) keys[p] = sel[tree.leaf_of(p)];
    return Partition::from_keys(keys, nodes.size());
}

inline void check_pixel(const AlphaTree& tree, VertexId p) {
    if (p >= tree.pixel_count()) throw std::out_of_range("pixel id " + std::to_string(p) + " out of range");
}

}  // namespace detail

// Horizontal cut: the alpha-connected components at level alpha.
inline Partition cut_alpha(const AlphaTree& tree, Level alpha) {
    return detail::highest_qualifying_cut(tree, [alpha](const AlphaNode& n) { return n.alpha <= alpha; });
}

// (alpha, omega)-constrained components: per pixel, the largest ancestor with
// merge level <= alpha and intensity range <= omega.
inline Partition constrained_cc(const AlphaTree& tree, Level alpha, Level omega) {
    return detail::highest_qualifying_cut(
        tree, [alpha, omega](const AlphaNode& n) { return n.alpha <= alpha && n.range() <= omega; });
}

// (omega)-constrained components: only the global range constraint applies.
inline Partition omega_cc(const AlphaTree& tree, Level omega) {
    return detail::highest_qualifying_cut(tree, [omega](const AlphaNode& n) { return n.range() <= omega; });
}

// Single-linkage ultrametric: merge level of the two pixels.
inline Level d_alpha(const AlphaTree& tree, VertexId p, VertexId q) {
    detail::check_pixel(tree, p);
    detail::check_pixel(tree, q);
    return tree.node(tree.lowest_common_ancestor(tree.leaf_of(p), tree.leaf_of(q))).alpha;
}

// Global range ultrametric: smallest range of a component holding both pixels.
inline Level d_omega(const AlphaTree& tree, VertexId p, VertexId q) {
    detail::check_pixel(tree, p);
    detail::check_pixel(tree, q);
    if (p == q) return 0;
    return tree.node(tree.lowest_common_ancestor(tree.leaf_of(p), tree.leaf_of(q))).range();
}

}  // namespace hierseg

#endif
