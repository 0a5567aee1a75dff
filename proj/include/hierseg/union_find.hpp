#ifndef HIERSEG_UNION_FIND_HPP
#define HIERSEG_UNION_FIND_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "hierseg/types.hpp"

namespace hierseg {

// Disjoint-set forest with union by rank and path halving.
class UnionFind {
public:
    UnionFind() = default;
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
        std::iota(parent_.begin(), parent_.end(), VertexId{0});
    }

    std::size_t size() const noexcept { return parent_.size(); }
    std::size_t set_count() const noexcept { return sets_; }

    VertexId find(VertexId x) noexcept {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Merges the sets of a and b and returns the new root.
    VertexId unite(VertexId a, VertexId b) noexcept {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        return link(a, b);
    }

    // Both arguments must be roots.
    VertexId link(VertexId a, VertexId b) noexcept {
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        --sets_;
        return a;
    }

    bool same(VertexId a, VertexId b) noexcept { return find(a) == find(b); }

private:
    std::vector<VertexId> parent_;
    std::vector<std::uint8_t> rank_;
    std::size_t sets_ = 0;
};

}  // namespace hierseg

#endif
