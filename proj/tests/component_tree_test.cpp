#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hierseg/alpha_tree.hpp"
#include "hierseg/component_tree.hpp"
#include "oracles.hpp"

using namespace hierseg;

TEST(MinTree, ConstantGraphIsOneNode) {
    const auto t = build_min_tree(build_pixel_graph(GridImage(3, 3, std::vector<Level>(9, 4))));
    ASSERT_EQ(t.node_count(), 1u);
    EXPECT_EQ(t.node(0), (ComponentNode{no_node, 4, 9, 4, 4}));
}

TEST(MinTree, PathWithTwoMinima) {
    const EdgeWeightedGraph g(3, {{0, 1, 0}, {1, 2, 0}}, std::vector<Level>{1, 5, 2});
    const auto t = build_min_tree(g);
    ASSERT_EQ(t.node_count(), 3u);
    EXPECT_EQ(t.node(0), (ComponentNode{2, 1, 1, 1, 1}));
    EXPECT_EQ(t.node(1), (ComponentNode{2, 2, 1, 2, 2}));
    EXPECT_EQ(t.node(2), (ComponentNode{no_node, 5, 3, 1, 5}));
    EXPECT_TRUE(t.is_leaf(0));
    EXPECT_TRUE(t.is_leaf(1));
    EXPECT_EQ(t.node_of(1), 2u);
}

TEST(MinTree, DisconnectedGraphThrows) {
    EXPECT_THROW(build_min_tree(EdgeWeightedGraph(3, {{0, 1, 0}}, std::vector<Level>{1, 1, 1})), disconnected_graph);
}

// Every node is a connected component of a lower level set, parents sit
// strictly higher, and leaves are exactly the regional minima.
TEST(MinTree, MatchesThresholdDecomposition) {
    std::mt19937 rng(37);
    for (int i = 0; i < 25; ++i) {
        const auto img = testutil::random_image(rng, 6, 5, 6);
        const auto g = build_pixel_graph(img);
        const auto t = build_min_tree(g);
        const auto sets = t.vertex_sets();

        std::set<std::vector<VertexId>> expected;
        for (Level level = 0; level <= 6; ++level)
            for (std::size_t p = 0; p < img.size(); ++p) {
                if (img[p] > level) continue;
                auto cc = oracle::flood(img, p, [&](std::size_t, std::size_t q) { return img[q] <= level; });
                expected.insert(std::vector<VertexId>(cc.begin(), cc.end()));
            }
        EXPECT_EQ(std::set<std::vector<VertexId>>(sets.begin(), sets.end()), expected);
        EXPECT_EQ(sets.size(), t.node_count());

        const auto minima = regional_minima(g);
        for (NodeId n = 0; n < t.node_count(); ++n) {
            const auto& node = t.node(n);
            if (node.parent != no_node) { EXPECT_LT(node.level, t.node(node.parent).level); }
            EXPECT_EQ(node.area, sets[n].size());
            if (t.is_leaf(n)) {
                for (auto v : sets[n]) EXPECT_TRUE(minima[v]);
            }
        }
        for (VertexId v = 0; v < img.size(); ++v)
            if (minima[v]) { EXPECT_TRUE(t.is_leaf(t.node_of(v))); }
    }
}

TEST(MinTree, LineGraphContainsAlphaTreeNodes) {
    const auto img = testutil::fixture("isolated_7x7.pgm");
    const auto g = build_pixel_graph(img);
    const auto alpha_sets = build_alpha_tree(g).pixel_sets();
    const auto g1 = double_graph(g);
    const auto mt = build_min_tree(line_graph(g1));

    // restrict each min-tree node to original vertices via their twin edges
    const std::size_t n = img.size();
    const std::size_t first_twin_edge = g.edge_count();
    std::set<std::vector<VertexId>> restricted;
    for (const auto& edges : mt.vertex_sets()) {
        std::vector<VertexId> pixels;
        for (auto e : edges)
            if (e >= first_twin_edge) pixels.push_back(static_cast<VertexId>(e - first_twin_edge));
        if (!pixels.empty()) restricted.insert(pixels);
    }
    for (const auto& s : alpha_sets) EXPECT_TRUE(restricted.count(s)) << "set of size " << s.size();
    EXPECT_EQ(g1.edge(static_cast<EdgeId>(first_twin_edge + 3)), (Edge{3, static_cast<VertexId>(n + 3), 0}));
}
