#include <gtest/gtest.h>

#include <random>

#include "hierseg/ultrametric.hpp"
#include "oracles.hpp"

using namespace hierseg;

namespace {

EdgeWeightedGraph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 0});
    return EdgeWeightedGraph(n, edges);
}

SaliencyMap saliency_of(const GridImage& img) {
    const auto g = build_pixel_graph(img);
    return saliency_from_tree(build_alpha_tree(g), g);
}

std::vector<Level> vals(const SaliencyMap& m) { return {m.values().begin(), m.values().end()}; }

}  // namespace

TEST(Saliency, Examples) {
    EXPECT_EQ(saliency_of(GridImage(3, 3, std::vector<Level>(9, 1))).max_value(), 0u);
    EXPECT_EQ(vals(saliency_of(GridImage::from_rows({{0, 2, 3}}))), (std::vector<Level>{2, 1}));
    EXPECT_EQ(vals(saliency_of(GridImage::from_rows({{0, 0, 2, 2}}))), (std::vector<Level>{0, 2, 0}));
}

TEST(Saliency, MismatchedTreeThrows) {
    const auto g = build_pixel_graph(GridImage::from_rows({{0, 2, 3}}));
    const auto other = build_alpha_tree(build_pixel_graph(GridImage::from_rows({{0, 2}})));
    EXPECT_THROW(saliency_from_tree(other, g), invalid_input);
    EXPECT_THROW(SaliencyMap(g, {1}), invalid_input);
}

TEST(PassValue, Examples) {
    const EdgeWeightedGraph tri(3, {{0, 1, 3}, {1, 2, 1}, {0, 2, 1}});
    EXPECT_EQ(pass_value(tri, 0, 1), 1u);
    EXPECT_EQ(pass_value(tri, 2, 2), 0u);
    EXPECT_THROW(pass_value(tri, 0, 3), std::out_of_range);
    EXPECT_THROW(pass_value(EdgeWeightedGraph(3, {{0, 1, 2}}), 0, 2), disconnected_graph);
}

TEST(PassValue, EqualsTreeUltrametricAndPathOracle) {
    std::mt19937 rng(59);
    for (int i = 0; i < 20; ++i) {
        const auto img = testutil::random_image(rng, 4, 4, 9);
        const auto g = build_pixel_graph(img);
        const auto t = build_alpha_tree(g);
        for (VertexId p = 0; p < 16; ++p)
            for (VertexId q = 0; q < 16; ++q) {
                EXPECT_EQ(pass_value(g, p, q), d_alpha(t, p, q));
                EXPECT_EQ(pass_value(g, p, q), oracle::minimax(img, p, q));
            }
    }
}

TEST(Watershed, PathExamplesWithEdgeOnlyMinima) {
    const auto g = path_graph(4);
    const auto strict = MinimaReading::edges_only;
    EXPECT_FALSE(is_ultrametric_watershed(SaliencyMap(g, {1, 2, 1}), strict));
    EXPECT_TRUE(is_ultrametric_watershed(SaliencyMap(g, {0, 2, 0}), strict));
    const auto bad = is_ultrametric_watershed(SaliencyMap(g, {1, 2, 1}), strict);
    ASSERT_TRUE(bad.edge.has_value());
    EXPECT_EQ(*bad.edge, 0u);
}

// [1,2,1] is the saliency of the 4x1 image [0,1,3,4]: its flat zones are
// single pixels, which the doubled reading counts as minima at 0.
TEST(Watershed, PathExamplesOnDoubledGraph) {
    const auto g = path_graph(4);
    EXPECT_TRUE(is_ultrametric_watershed(SaliencyMap(g, {1, 2, 1})));
    EXPECT_TRUE(is_ultrametric_watershed(SaliencyMap(g, {0, 2, 0})));
    EXPECT_EQ(vals(saliency_of(GridImage::from_rows({{0, 1, 3, 4}}))), (std::vector<Level>{1, 2, 1}));
}

// With a zero edge inside every flat zone, both readings agree.
TEST(Watershed, ReadingsAgreeWhenEveryRegionHasAZeroEdge) {
    std::mt19937 rng(63);
    for (int i = 0; i < 30; ++i) {
        auto img = testutil::random_image(rng, 8, 8, 6);
        std::vector<Level> v(img.values().begin(), img.values().end());
        std::vector<Level> doubled;
        for (std::size_t y = 0; y < 8; ++y)
            for (std::size_t x = 0; x < 16; ++x) doubled.push_back(v[y * 8 + x / 2]);
        const auto s = saliency_of(GridImage(16, 8, doubled));
        EXPECT_TRUE(is_ultrametric_watershed(s, MinimaReading::edges_only));
        EXPECT_TRUE(is_ultrametric_watershed(s));
    }
}

TEST(Watershed, RejectsEdgeAbovePassValue) {
    const EdgeWeightedGraph tri(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}});
    const auto r = is_ultrametric_watershed(SaliencyMap(tri, {0, 0, 4}));
    EXPECT_FALSE(r);
    EXPECT_EQ(r.edge, std::optional<EdgeId>(2));
    EXPECT_FALSE(is_ultrametric_watershed(SaliencyMap(EdgeWeightedGraph(3, {{0, 1, 0}}), {0})));
}

TEST(Watershed, SaliencyOfEveryTreeQualifies) {
    std::mt19937 rng(61);
    for (int i = 0; i < 100; ++i) {
        const auto s = saliency_of(testutil::random_image(rng, 8, 8, i % 3 ? 255 : 3));
        const auto r = is_ultrametric_watershed(s);
        EXPECT_TRUE(r) << r.reason;
    }
}

TEST(HierarchyFromSaliency, Examples) {
    const auto g = path_graph(3);
    EXPECT_EQ(hierarchy_from_saliency(SaliencyMap(g, {0, 0})).node_count(), 1u);
    const auto t = hierarchy_from_saliency(SaliencyMap(g, {2, 1}));
    EXPECT_EQ(t.node_count(), 5u);
    EXPECT_EQ(t.node(t.root()).alpha, 2u);
    EXPECT_EQ(t.node(3).alpha, 1u);
    EXPECT_EQ(t.node(3).area, 2u);
}

TEST(HierarchyFromSaliency, RoundTrips) {
    std::mt19937 rng(67);
    for (int i = 0; i < 100; ++i) {
        const auto img = testutil::random_image(rng, 8, 8, i % 2 ? 200 : 6);
        const auto g = build_pixel_graph(img);
        const auto tree = build_alpha_tree(g);
        const auto s = saliency_from_tree(tree, g);
        const auto back = hierarchy_from_saliency(s);
        EXPECT_EQ(back.node_count(), tree.node_count());
        EXPECT_EQ(back.pixel_sets(), tree.pixel_sets());
        for (NodeId n = 0; n < tree.node_count(); ++n) EXPECT_EQ(back.node(n).alpha, tree.node(n).alpha);
        EXPECT_EQ(saliency_from_tree(back, g), s);
    }
}

TEST(Cut, Examples) {
    const auto img = testutil::fixture("isolated_7x7.pgm");
    const auto s = saliency_of(img);
    EXPECT_EQ(cut_saliency(s, 0), flat_zones(img));
    EXPECT_EQ(cut_saliency(s, s.max_value()).component_count(), 1u);
}

TEST(Cut, MatchesTreeCutsAndNests) {
    std::mt19937 rng(71);
    for (int i = 0; i < 30; ++i) {
        const auto img = testutil::random_image(rng, 8, 8, 15);
        const auto g = build_pixel_graph(img);
        const auto t = build_alpha_tree(g);
        const auto s = saliency_from_tree(t, g);
        for (Level l = 0; l <= 15; ++l) {
            EXPECT_EQ(cut_saliency(s, l), cut_alpha(t, l));
            if (l > 0) { EXPECT_TRUE(cut_saliency(s, l - 1).refines(cut_saliency(s, l))); }
        }
    }
}

TEST(RangeFilter, Examples) {
    const auto img = GridImage::from_rows({{0, 2, 3}});
    const auto s = saliency_of(img);
    EXPECT_EQ(vals(range_filter_saliency(s, img.values(), 0)), (std::vector<Level>{3, 1}));
    EXPECT_EQ(vals(range_filter_saliency(s, img.values(), 1)), (std::vector<Level>{3, 0}));
    const GridImage flat(3, 2, std::vector<Level>(6, 5));
    EXPECT_EQ(range_filter_saliency(saliency_of(flat), flat.values(), 0).max_value(), 0u);
    EXPECT_THROW(range_filter_saliency(s, std::vector<Level>{1}, 0), invalid_input);
}

TEST(RangeFilter, CutsGiveOmegaComponents) {
    std::mt19937 rng(73);
    for (int i = 0; i < 30; ++i) {
        const auto img = testutil::random_image(rng, 8, 8, 20);
        const auto g = build_pixel_graph(img);
        const auto t = build_alpha_tree(g);
        const auto s = saliency_from_tree(t, g);
        const auto pure = range_filter_saliency(s, img.values(), 0);
        EXPECT_TRUE(is_ultrametric_watershed(pure));
        for (Level w = 0; w <= 20; ++w) {
            EXPECT_EQ(cut_saliency(pure, w), omega_cc(t, w));
            const auto flooded = range_filter_saliency(s, img.values(), w);
            EXPECT_EQ(cut_saliency(flooded, 0), omega_cc(t, w));
            for (Level w2 = w; w2 <= 20; w2 += 3) EXPECT_EQ(cut_saliency(flooded, w2), omega_cc(t, w2));
        }
    }
}

TEST(Khalimsky, Examples) {
    EXPECT_EQ(render_khalimsky(saliency_of(GridImage::from_rows({{4}})), 1, 1), ScalarMap(1, 1));
    const auto r = render_khalimsky(saliency_of(GridImage::from_rows({{0, 3}})), 2, 1);
    EXPECT_EQ(r.values, (std::vector<Level>{0, 3, 0}));
    EXPECT_EQ(render_khalimsky(saliency_of(GridImage(2, 2, std::vector<Level>(4, 8))), 2, 2), ScalarMap(3, 3));
}

TEST(Khalimsky, LayoutOfTwoByTwo) {
    // 0 5
    // 5 5
    const auto r = render_khalimsky(saliency_of(GridImage::from_rows({{0, 5}, {5, 5}})), 2, 2);
    EXPECT_EQ(r.values, (std::vector<Level>{0, 5, 0, 5, 5, 0, 0, 0, 0}));
}

TEST(Khalimsky, RejectsNonGridGraphs) {
    const SaliencyMap s(path_graph(4), {0, 1, 0});
    EXPECT_THROW(render_khalimsky(s, 2, 2), invalid_input);
    EXPECT_THROW(render_khalimsky(s, 3, 1), invalid_input);
    EXPECT_NO_THROW(render_khalimsky(s, 4, 1));
}

TEST(Ultrametrics, SaliencyPassValuesObeyUltrametricInequality) {
    std::mt19937 rng(79);
    const auto s = saliency_of(testutil::random_image(rng, 6, 6, 50));
    const auto sg = s.as_graph();
    std::uniform_int_distribution<VertexId> pick(0, 35);
    for (int i = 0; i < 300; ++i) {
        const auto p = pick(rng), q = pick(rng), r = pick(rng);
        EXPECT_LE(pass_value(sg, p, q), std::max(pass_value(sg, p, r), pass_value(sg, r, q)));
    }
}
