#ifndef HIERSEG_TESTS_ORACLES_HPP
#define HIERSEG_TESTS_ORACLES_HPP

// Brute-force reference implementations used only by the tests. They work on
// the raw raster and share no code with the library beyond its value types.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <random>
#include <string>
#include <vector>

#include "hierseg/image.hpp"
#include "hierseg/partition.hpp"
#include "hierseg/pgm.hpp"

namespace oracle {

using hierseg::GridImage;
using hierseg::Level;
using hierseg::Partition;
using hierseg::VertexId;

inline Level diff(Level a, Level b) { return a > b ? a - b : b - a; }

inline std::vector<std::size_t> neighbors(const GridImage& img, std::size_t p) {
    std::vector<std::size_t> out;
    const std::size_t w = img.width(), h = img.height(), x = p % w, y = p / w;
    if (x > 0) out.push_back(p - 1);
    if (x + 1 < w) out.push_back(p + 1);
    if (y > 0) out.push_back(p - w);
    if (y + 1 < h) out.push_back(p + w);
    return out;
}

// Pixels reachable from `start` through steps accepted by `step(p, q)`.
template <class Step>
std::vector<std::size_t> flood(const GridImage& img, std::size_t start, Step step) {
    std::vector<std::uint8_t> seen(img.size(), 0);
    std::vector<std::size_t> out{start};
    std::deque<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
        const auto p = queue.front();
        queue.pop_front();
        for (auto q : neighbors(img, p)) {
            if (seen[q] || !step(p, q)) continue;
            seen[q] = 1;
            out.push_back(q);
            queue.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::size_t> alpha_cc_of(const GridImage& img, std::size_t p, Level alpha) {
    return flood(img, p, [&](std::size_t a, std::size_t b) { return diff(img[a], img[b]) <= alpha; });
}

inline Level range_of(const GridImage& img, const std::vector<std::size_t>& set) {
    Level lo = img[set.front()], hi = lo;
    for (auto p : set) {
        lo = std::min(lo, img[p]);
        hi = std::max(hi, img[p]);
    }
    return hi - lo;
}

inline Level max_adjacent_diff(const GridImage& img) {
    Level m = 0;
    for (std::size_t p = 0; p < img.size(); ++p)
        for (auto q : neighbors(img, p)) m = std::max(m, diff(img[p], img[q]));
    return m;
}

// Labels every pixel with the smallest pixel of the set chosen for it.
template <class SetOf>
Partition partition_of(const GridImage& img, SetOf set_of) {
    std::vector<VertexId> labels(img.size());
    for (std::size_t p = 0; p < img.size(); ++p) labels[p] = static_cast<VertexId>(set_of(p).front());
    return Partition::from_labels(labels);
}

inline Partition alpha_cc(const GridImage& img, Level alpha) {
    return partition_of(img, [&](std::size_t p) { return alpha_cc_of(img, p, alpha); });
}

// Largest alpha_i-CC (alpha_i <= alpha) of each pixel whose range is <= omega.
inline Partition constrained(const GridImage& img, Level alpha, Level omega) {
    return partition_of(img, [&](std::size_t p) {
        std::vector<std::size_t> best{p};
        for (Level a = 0; a <= alpha; ++a) {
            auto cc = alpha_cc_of(img, p, a);
            if (range_of(img, cc) <= omega) best = std::move(cc);
        }
        return best;
    });
}

inline Partition omega_only(const GridImage& img, Level omega) {
    return constrained(img, max_adjacent_diff(img), omega);
}

// Minimax path value: smallest alpha whose alpha-CC of p holds q.
inline Level minimax(const GridImage& img, std::size_t p, std::size_t q) {
    for (Level a = 0;; ++a) {
        const auto cc = alpha_cc_of(img, p, a);
        if (std::binary_search(cc.begin(), cc.end(), q)) return a;
    }
}

// Smallest range of an alpha-CC holding both pixels.
inline Level min_common_range(const GridImage& img, std::size_t p, std::size_t q) {
    if (p == q) return 0;
    Level best = range_of(img, alpha_cc_of(img, p, max_adjacent_diff(img)));
    for (Level a = 0; a <= max_adjacent_diff(img); ++a) {
        const auto cc = alpha_cc_of(img, p, a);
        if (std::binary_search(cc.begin(), cc.end(), q)) best = std::min(best, range_of(img, cc));
    }
    return best;
}

inline std::vector<Level> degrees(const GridImage& img, Level alpha) {
    std::vector<Level> out(img.size());
    for (std::size_t p = 0; p < img.size(); ++p)
        for (auto q : neighbors(img, p)) out[p] += diff(img[p], img[q]) <= alpha;
    return out;
}

// Path search restricted to pixels of degree >= n, endpoints included.
inline Partition alpha_n(const GridImage& img, Level alpha, Level n) {
    const auto deg = degrees(img, alpha);
    return partition_of(img, [&](std::size_t p) {
        if (deg[p] < n) return std::vector<std::size_t>{p};
        return flood(img, p, [&](std::size_t a, std::size_t b) { return deg[b] >= n && diff(img[a], img[b]) <= alpha; });
    });
}

// The case formula for the minimum separation value as displayed in print:
// the lower transform when it is nonzero and smaller, the greater one otherwise.
inline Level displayed_min_separation(Level hmt_lower, Level hmt_greater) {
    return (hmt_lower < hmt_greater && hmt_lower != 0) ? hmt_lower : hmt_greater;
}

}  // namespace oracle

namespace testutil {

inline hierseg::GridImage fixture(const std::string& name) {
    return hierseg::read_pgm(std::string(HIERSEG_FIXTURE_DIR) + "/" + name);
}

inline hierseg::GridImage random_image(std::mt19937& rng, std::size_t w, std::size_t h, hierseg::Level max_value) {
    std::uniform_int_distribution<hierseg::Level> dist(0, max_value);
    std::vector<hierseg::Level> v(w * h);
    for (auto& x : v) x = dist(rng);
    return hierseg::GridImage(w, h, std::move(v), max_value < 256 ? 8 : 16);
}

}  // namespace testutil

#endif
