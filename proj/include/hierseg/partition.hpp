#ifndef HIERSEG_PARTITION_HPP
#define HIERSEG_PARTITION_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "hierseg/types.hpp"
#include "hierseg/union_find.hpp"

namespace hierseg {

// Labelling of vertices into disjoint components. Labels are canonical: every
// component is labelled with the smallest vertex id it contains.
class Partition {
public:
    Partition() = default;

    // Builds a canonical partition from arbitrary per-vertex component keys,
    // each key strictly below key_bound.
    static Partition from_keys(std::span<const std::uint32_t> keys, std::size_t key_bound) {
        std::vector<VertexId> first(key_bound, no_node);
        Partition out;
        out.labels_.resize(keys.size());
        for (std::size_t v = 0; v < keys.size(); ++v) {
            const auto k = keys[v];
            if (k >= key_bound) throw invalid_input("partition key out of range");
            if (first[k] == no_node) {
                first[k] = static_cast<VertexId>(v);
                ++out.count_;
            }
            out.labels_[v] = first[k];
        }
        return out;
    }

    static Partition from_union_find(UnionFind& uf) {
        std::vector<std::uint32_t> keys(uf.size());
        for (std::size_t v = 0; v < keys.size(); ++v) keys[v] = uf.find(static_cast<VertexId>(v));
        return from_keys(keys, keys.size());
    }

    // Accepts any labelling and canonicalises it.
    static Partition from_labels(std::span<const VertexId> labels) {
        std::vector<std::uint32_t> keys(labels.begin(), labels.end());
        std::size_t bound = 0;
        for (auto k : keys) bound = std::max<std::size_t>(bound, std::size_t{k} + 1);
        return from_keys(keys, bound);
    }

    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t component_count() const noexcept { return count_; }
    VertexId label(VertexId v) const { return labels_.at(v); }
    std::span<const VertexId> labels() const noexcept { return labels_; }

    // Members of each component, ordered by label.
    std::vector<std::vector<VertexId>> components() const {
        std::vector<std::uint32_t> slot(labels_.size(), no_node);
        std::vector<std::vector<VertexId>> out;
        out.reserve(count_);
        for (std::size_t v = 0; v < labels_.size(); ++v) {
            const auto l = labels_[v];
            if (slot[l] == no_node) {
                slot[l] = static_cast<std::uint32_t>(out.size());
                out.emplace_back();
            }
            out[slot[l]].push_back(static_cast<VertexId>(v));
        }
        return out;
    }

    std::size_t component_size(VertexId v) const {
        std::size_t n = 0;
        const auto l = labels_.at(v);
        for (auto x : labels_) n += (x == l);
        return n;
    }

    // True when every component of *this lies inside a single component of coarser.
    bool refines(const Partition& coarser) const {
        if (coarser.size() != size()) return false;
        std::vector<VertexId> image(labels_.size(), no_node);
        for (std::size_t v = 0; v < labels_.size(); ++v) {
            auto& slot = image[labels_[v]];
            if (slot == no_node)
                slot = coarser.labels_[v];
            else if (slot != coarser.labels_[v])
                return false;
        }
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<VertexId> labels_;
    std::size_t count_ = 0;
};

}  // namespace hierseg

#endif
