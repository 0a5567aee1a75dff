#ifndef HIERSEG_ALPHA_N_HPP
#define HIERSEG_ALPHA_N_HPP

#include <cstddef>

#include "hierseg/graph.hpp"
#include "hierseg/image.hpp"
#include "hierseg/parallel.hpp"
#include "hierseg/partition.hpp"
#include "hierseg/union_find.hpp"

namespace hierseg {

// Number of 4-neighbours whose intensity differs from the pixel's by at most alpha.
inline ScalarMap alpha_degree_map(const GridImage& image, Level alpha) {
    ScalarMap out(image.width(), image.height());
    parallel_for_blocks(image.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t p = b; p < e; ++p) {
            Level degree = 0;
            for_each_neighbor4(image.width(), image.height(), p, [&](std::size_t q) {
                degree += AbsoluteDifference{}(image[p], image[q]) <= alpha;
            });
            out[p] = degree;
        }
    });
    return out;
}

// Pixels linked by an alpha-path on which every pixel, endpoints included,
// has alpha-degree >= min_degree. Pixels below the degree threshold stay
// singletons. min_degree = 1 gives the plain alpha-connected components.
inline Partition alpha_n_partition(const GridImage& image, Level alpha, Level min_degree) {
    if (min_degree == 0) throw invalid_input("degree threshold must be positive");
    const auto degree = alpha_degree_map(image, alpha);
    const std::size_t w = image.width();
    UnionFind uf(image.size());
    auto link = [&](std::size_t p, std::size_t q) {
        if (degree[p] >= min_degree && degree[q] >= min_degree && AbsoluteDifference{}(image[p], image[q]) <= alpha)
            uf.unite(static_cast<VertexId>(p), static_cast<VertexId>(q));
    };
    for (std::size_t p = 0; p < image.size(); ++p) {
        if ((p + 1) % w != 0) link(p, p + 1);
        if (p + w < image.size()) link(p, p + w);
    }
    return Partition::from_union_find(uf);
}

}  // namespace hierseg

#endif
