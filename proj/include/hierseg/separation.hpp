#ifndef HIERSEG_SEPARATION_HPP
#define HIERSEG_SEPARATION_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "hierseg/graph.hpp"
#include "hierseg/image.hpp"
#include "hierseg/parallel.hpp"
#include "hierseg/partition.hpp"

// Adaptive hit-or-miss transforms, transition pixels and separation values.
// Neighbourhoods are 4-connected and restricted to in-image pixels.

namespace hierseg {

namespace detail {

template <class PixelFn>
ScalarMap map_pixels(const GridImage& image, PixelFn pixel) {
    ScalarMap out(image.width(), image.height());
    parallel_for_blocks(image.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t p = b; p < e; ++p) out[p] = pixel(p);
    });
    return out;
}

// Per flat zone, reduce the nonzero values of a pixel map with `pick`, then
// paint the result back over the zone. Zones without nonzero values get 0.
template <class Pick>
ScalarMap reduce_over_flat_zones(const GridImage& image, const ScalarMap& per_pixel, Pick pick) {
    const auto zones = flat_zones(image);
    constexpr Level unset = std::numeric_limits<Level>::max();
    std::vector<Level> acc(image.size(), unset);
    for (std::size_t p = 0; p < image.size(); ++p) {
        const auto v = per_pixel[p];
        if (v == 0) continue;
        auto& a = acc[zones.label(static_cast<VertexId>(p))];
        a = (a == unset) ? v : pick(a, v);
    }
    ScalarMap out(image.width(), image.height());
    for (std::size_t p = 0; p < image.size(); ++p) {
        const auto a = acc[zones.label(static_cast<VertexId>(p))];
        out[p] = (a == unset) ? 0 : a;
    }
    return out;
}

inline ScalarMap mask_from(const std::vector<std::uint8_t>& flags, std::size_t w, std::size_t h) {
    ScalarMap out(w, h);
    for (std::size_t i = 0; i < flags.size(); ++i) out[i] = flags[i];
    return out;
}

}  // namespace detail

// f(p) minus its largest strictly lower neighbour; 0 without lower neighbours.
inline ScalarMap hmt_lower(const GridImage& image) {
    return detail::map_pixels(image, [&](std::size_t p) {
        const Level fp = image[p];
        bool any = false;
        Level best = 0;
        for_each_neighbor4(image.width(), image.height(), p, [&](std::size_t q) {
            if (image[q] < fp && (!any || image[q] > best)) {
                best = image[q];
                any = true;
            }
        });
        return any ? fp - best : Level{0};
    });
}

// Smallest strictly greater neighbour minus f(p); 0 without greater neighbours.
inline ScalarMap hmt_greater(const GridImage& image) {
    return detail::map_pixels(image, [&](std::size_t p) {
        const Level fp = image[p];
        bool any = false;
        Level best = 0;
        for_each_neighbor4(image.width(), image.height(), p, [&](std::size_t q) {
            if (image[q] > fp && (!any || image[q] < best)) {
                best = image[q];
                any = true;
            }
        });
        return any ? best - fp : Level{0};
    });
}

// 1 where a pixel has both strictly lower and strictly greater neighbours.
inline ScalarMap transition_mask(const GridImage& image) {
    const auto lower = hmt_lower(image);
    const auto greater = hmt_greater(image);
    ScalarMap out(image.width(), image.height());
    for (std::size_t p = 0; p < image.size(); ++p) out[p] = std::min(lower[p], greater[p]) > 0 ? 1 : 0;
    return out;
}

// Minimum absolute difference to a neighbour of different value, 0 if none.
inline ScalarMap min_separation_pixels(const GridImage& image) {
    return detail::map_pixels(image, [&](std::size_t p) {
        Level best = std::numeric_limits<Level>::max();
        for_each_neighbor4(image.width(), image.height(), p, [&](std::size_t q) {
            if (image[q] != image[p]) best = std::min(best, AbsoluteDifference{}(image[p], image[q]));
        });
        return best == std::numeric_limits<Level>::max() ? Level{0} : best;
    });
}

// Maximum absolute difference to a neighbour of different value, 0 if none.
inline ScalarMap max_separation_pixels(const GridImage& image) {
    return detail::map_pixels(image, [&](std::size_t p) {
        Level best = 0;
        for_each_neighbor4(image.width(), image.height(), p,
                           [&](std::size_t q) { best = std::max(best, AbsoluteDifference{}(image[p], image[q])); });
        return best;
    });
}

// Each pixel receives the smallest nonzero pixel separation found in its flat
// zone, i.e. the lowest alpha at which the zone merges with another one.
inline ScalarMap min_separation_flatzones(const GridImage& image) {
    return detail::reduce_over_flat_zones(image, min_separation_pixels(image),
                                          [](Level a, Level b) { return std::min(a, b); });
}

inline ScalarMap max_separation_flatzones(const GridImage& image) {
    return detail::reduce_over_flat_zones(image, max_separation_pixels(image),
                                          [](Level a, Level b) { return std::max(a, b); });
}

// Binary masks of the plateaus without a strictly lower (resp. higher) neighbour.
inline ScalarMap regional_minima(const ScalarMap& map) {
    const auto g = build_grid_graph(map.width, map.height, map.values);
    return detail::mask_from(regional_minima(g), map.width, map.height);
}

inline ScalarMap regional_maxima(const ScalarMap& map) {
    const auto g = build_grid_graph(map.width, map.height, map.values);
    return detail::mask_from(regional_maxima(g), map.width, map.height);
}

}  // namespace hierseg

#endif
