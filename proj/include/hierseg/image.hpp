#ifndef HIERSEG_IMAGE_HPP
#define HIERSEG_IMAGE_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hierseg/types.hpp"

namespace hierseg {

// Greyscale raster, row-major with the origin at the top-left corner.
class GridImage {
public:
    GridImage() = default;

    GridImage(std::size_t width, std::size_t height, std::vector<Level> values, unsigned bit_depth = 8)
        : width_(width), height_(height), bit_depth_(bit_depth), values_(std::move(values)) {
        if (width_ == 0 || height_ == 0) throw invalid_input("image must be non-empty");
        if (values_.size() != width_ * height_)
            throw invalid_input("image has " + std::to_string(values_.size()) + " values, expected " +
                                std::to_string(width_ * height_));
        if (bit_depth_ != 8 && bit_depth_ != 16) throw invalid_input("bit depth must be 8 or 16");
        const Level limit = bit_depth_ == 8 ? 255u : 65535u;
        if (std::any_of(values_.begin(), values_.end(), [limit](Level v) { return v > limit; }))
            throw invalid_input("intensity exceeds the declared bit depth");
    }

    // Row-major nested initialiser, mostly for tests and fixtures.
    static GridImage from_rows(const std::vector<std::vector<Level>>& rows, unsigned bit_depth = 8) {
        if (rows.empty() || rows.front().empty()) throw invalid_input("image must be non-empty");
        std::vector<Level> values;
        for (const auto& row : rows) {
            if (row.size() != rows.front().size()) throw invalid_input("ragged rows");
            values.insert(values.end(), row.begin(), row.end());
        }
        return GridImage(rows.front().size(), rows.size(), std::move(values), bit_depth);
    }

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return values_.size(); }
    unsigned bit_depth() const noexcept { return bit_depth_; }
    bool empty() const noexcept { return values_.empty(); }

    Level operator[](std::size_t i) const noexcept { return values_[i]; }
    Level at(std::size_t x, std::size_t y) const { return values_.at(y * width_ + x); }
    std::span<const Level> values() const noexcept { return values_; }

    friend bool operator==(const GridImage&, const GridImage&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    unsigned bit_depth_ = 8;
    std::vector<Level> values_;
};

// Per-pixel integer output of the separation and degree operators.
struct ScalarMap {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<Level> values;

    ScalarMap() = default;
    ScalarMap(std::size_t w, std::size_t h, Level fill = 0) : width(w), height(h), values(w * h, fill) {}
    ScalarMap(std::size_t w, std::size_t h, std::vector<Level> v) : width(w), height(h), values(std::move(v)) {
        if (values.size() != w * h) throw invalid_input("scalar map size mismatch");
    }

    Level& operator[](std::size_t i) noexcept { return values[i]; }
    Level operator[](std::size_t i) const noexcept { return values[i]; }
    Level at(std::size_t x, std::size_t y) const { return values.at(y * width + x); }
    std::size_t size() const noexcept { return values.size(); }

    friend bool operator==(const ScalarMap&, const ScalarMap&) = default;
};

// Calls fn(q) for every 4-neighbour q of pixel p that lies inside the raster.
template <class Fn>
inline void for_each_neighbor4(std::size_t width, std::size_t height, std::size_t p, Fn&& fn) {
    const std::size_t x = p % width;
    const std::size_t y = p / width;
    if (y > 0) fn(p - width);
    if (x > 0) fn(p - 1);
    if (x + 1 < width) fn(p + 1);
    if (y + 1 < height) fn(p + width);
}

}  // namespace hierseg

#endif
