#include <gtest/gtest.h>

#include <random>

#include "hierseg/union_find.hpp"

using hierseg::UnionFind;

TEST(UnionFind, StartsAsSingletons) {
    UnionFind uf(5);
    EXPECT_EQ(uf.set_count(), 5u);
    for (hierseg::VertexId v = 0; v < 5; ++v) EXPECT_EQ(uf.find(v), v);
}

TEST(UnionFind, UniteJoinsAndCounts) {
    UnionFind uf(4);
    uf.unite(0, 1);
    uf.unite(2, 3);
    EXPECT_TRUE(uf.same(0, 1));
    EXPECT_FALSE(uf.same(1, 2));
    EXPECT_EQ(uf.set_count(), 2u);
    uf.unite(1, 3);
    EXPECT_TRUE(uf.same(0, 2));
    EXPECT_EQ(uf.set_count(), 1u);
    uf.unite(0, 3);
    EXPECT_EQ(uf.set_count(), 1u);
}

TEST(UnionFind, FindIsIdempotentUnderRandomUnions) {
    std::mt19937 rng(7);
    UnionFind uf(200);
    std::uniform_int_distribution<hierseg::VertexId> pick(0, 199);
    for (int i = 0; i < 150; ++i) {
        const auto a = pick(rng), b = pick(rng);
        uf.unite(a, b);
        EXPECT_EQ(uf.find(a), uf.find(b));
    }
    for (hierseg::VertexId v = 0; v < 200; ++v) EXPECT_EQ(uf.find(uf.find(v)), uf.find(v));
}
