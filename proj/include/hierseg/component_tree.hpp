#ifndef HIERSEG_COMPONENT_TREE_HPP
#define HIERSEG_COMPONENT_TREE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <tuple>
#include <vector>

#include "hierseg/graph.hpp"
#include "hierseg/types.hpp"
#include "hierseg/union_find.hpp"

namespace hierseg {

struct ComponentNode {
    NodeId parent = no_node;
    Level level = 0;  // vertex weight at which the component appears
    std::uint64_t area = 0;
    Level min_value = 0;
    Level max_value = 0;

    friend bool operator==(const ComponentNode&, const ComponentNode&) = default;
};

// Min-tree: hierarchy of the connected components of the lower level sets of a
// vertex-weighted graph. Leaves are regional minima. Nodes are numbered by
// increasing (level, smallest vertex), so the root is the last node.
class ComponentTree {
public:
    ComponentTree() = default;
    ComponentTree(std::vector<ComponentNode> nodes, std::vector<NodeId> node_of_vertex)
        : nodes_(std::move(nodes)), node_of_vertex_(std::move(node_of_vertex)) {
        child_count_.assign(nodes_.size(), 0);
        for (const auto& n : nodes_)
            if (n.parent != no_node) ++child_count_[n.parent];
    }

    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t vertex_count() const noexcept { return node_of_vertex_.size(); }
    std::span<const ComponentNode> nodes() const noexcept { return nodes_; }
    const ComponentNode& node(NodeId n) const { return nodes_.at(n); }
    NodeId root() const noexcept { return static_cast<NodeId>(nodes_.size() - 1); }
    NodeId node_of(VertexId v) const { return node_of_vertex_.at(v); }
    bool is_leaf(NodeId n) const { return child_count_.at(n) == 0; }

    // Vertices of each node's subtree, sorted, indexed by node id.
    std::vector<std::vector<VertexId>> vertex_sets() const {
        std::vector<std::vector<VertexId>> sets(nodes_.size());
        for (VertexId v = 0; v < node_of_vertex_.size(); ++v) sets[node_of_vertex_[v]].push_back(v);
        for (NodeId n = 0; n + 1 < nodes_.size(); ++n) {
            auto& dst = sets[nodes_[n].parent];
            dst.insert(dst.end(), sets[n].begin(), sets[n].end());
        }
        for (auto& s : sets) std::sort(s.begin(), s.end());
        return sets;
    }

private:
    std::vector<ComponentNode> nodes_;
    std::vector<NodeId> node_of_vertex_;
    std::vector<std::uint32_t> child_count_;
};

// Union-find min-tree construction: vertices are processed by increasing
// weight, each one becoming the parent of the components it touches; the
// parent forest is then canonicalised so that one vertex represents each node.
inline ComponentTree build_min_tree(const EdgeWeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw invalid_input("graph has no vertices");
    const auto f = g.vertex_weights();
    const auto adj = build_adjacency(g);

    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return f[a] < f[b]; });

    std::vector<VertexId> parent(n);
    std::vector<VertexId> top(n);
    std::vector<std::uint8_t> seen(n, 0);
    UnionFind uf(n);
    for (const auto v : order) {
        parent[v] = v;
        top[v] = v;
        seen[v] = 1;
        for (const auto& [u, e] : adj.of(v)) {
            if (!seen[u]) continue;
            const auto ru = uf.find(u);
            const auto rv = uf.find(v);
            if (ru == rv) continue;
            parent[top[ru]] = v;
            top[uf.link(ru, rv)] = v;
        }
    }
    if (uf.set_count() != 1) throw disconnected_graph("min-tree needs a connected graph");

    // Root first: point every vertex at the canonical element of its level component.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto q = parent[*it];
        if (f[parent[q]] == f[q]) parent[*it] = parent[q];
    }
    const VertexId root_vertex = order.back();
    auto canonical = [&](VertexId v) { return v == root_vertex || f[parent[v]] != f[v]; };

    // Smallest vertex per node, for a deterministic numbering.
    std::vector<VertexId> first(n, no_node);
    for (VertexId v = 0; v < n; ++v) {
        const auto c = canonical(v) ? v : parent[v];
        first[c] = std::min(first[c], v);
    }
    for (const auto v : order)  // children before parents
        if (canonical(v) && v != root_vertex) first[parent[v]] = std::min(first[parent[v]], first[v]);

    std::vector<VertexId> reps;
    for (VertexId v = 0; v < n; ++v)
        if (canonical(v)) reps.push_back(v);
    std::sort(reps.begin(), reps.end(),
              [&](VertexId a, VertexId b) { return std::tie(f[a], first[a]) < std::tie(f[b], first[b]); });
    std::vector<NodeId> id(n, no_node);
    for (NodeId i = 0; i < reps.size(); ++i) id[reps[i]] = i;

    std::vector<ComponentNode> nodes(reps.size());
    for (NodeId i = 0; i < reps.size(); ++i) {
        const auto r = reps[i];
        nodes[i] = {r == root_vertex ? no_node : id[parent[r]], f[r], 0, f[r], f[r]};
    }
    std::vector<NodeId> node_of_vertex(n);
    for (VertexId v = 0; v < n; ++v) {
        node_of_vertex[v] = id[canonical(v) ? v : parent[v]];
        ++nodes[node_of_vertex[v]].area;
    }
    for (NodeId i = 0; i + 1 < nodes.size(); ++i) {
        auto& p = nodes[nodes[i].parent];
        p.area += nodes[i].area;
        p.min_value = std::min(p.min_value, nodes[i].min_value);
    }
    return ComponentTree(std::move(nodes), std::move(node_of_vertex));
}

}  // namespace hierseg

#endif
