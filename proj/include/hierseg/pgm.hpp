#ifndef HIERSEG_PGM_HPP
#define HIERSEG_PGM_HPP

#include <cctype>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hierseg/image.hpp"
#include "hierseg/types.hpp"

// Netpbm greymaps: ASCII (P2) and binary (P5), 8 or 16 bits per sample.
// '#' comments are accepted anywhere in the header and, for P2, in the body.

namespace hierseg {

namespace detail {

class PgmScanner {
public:
    explicit PgmScanner(std::string_view data) : data_(data) {}

    std::size_t number() {
        skip_space_and_comments();
        if (pos_ >= data_.size() || !std::isdigit(static_cast<unsigned char>(data_[pos_])))
            throw io_error("malformed PGM: expected a number");
        std::size_t v = 0;
        while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(data_[pos_++] - '0');
            if (v > (std::size_t{1} << 40)) throw io_error("malformed PGM: number too large");
        }
        return v;
    }

    // Exactly one whitespace byte separates the header from binary samples.
    std::string_view raster_bytes() {
        if (pos_ >= data_.size() || !std::isspace(static_cast<unsigned char>(data_[pos_])))
            throw io_error("malformed PGM: missing separator before samples");
        return data_.substr(pos_ + 1);
    }

    std::string_view take(std::size_t n) {
        if (pos_ + n > data_.size()) throw io_error("malformed PGM: truncated");
        auto s = data_.substr(pos_, n);
        pos_ += n;
        return s;
    }

private:
    void skip_space_and_comments() {
        while (pos_ < data_.size()) {
            const char c = data_[pos_];
            if (c == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view data_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline GridImage parse_pgm(std::string_view data) {
    detail::PgmScanner scan(data);
    const auto magic = scan.take(2);
    if (magic != "P2" && magic != "P5") throw io_error("not a PGM file (expected P2 or P5)");
    const auto width = scan.number();
    const auto height = scan.number();
    const auto maxval = scan.number();
    if (width == 0 || height == 0) throw io_error("PGM has zero size");
    if (maxval == 0 || maxval > 65535) throw io_error("PGM maxval out of range");
    const unsigned depth = maxval < 256 ? 8 : 16;
    std::vector<Level> values(width * height);
    if (magic == "P2") {
        for (auto& v : values) {
            v = static_cast<Level>(scan.number());
            if (v > maxval) throw io_error("PGM sample exceeds maxval");
        }
    } else {
        const auto bytes = scan.raster_bytes();
        const std::size_t stride = depth == 8 ? 1 : 2;
        if (bytes.size() < values.size() * stride) throw io_error("PGM raster is truncated");
        for (std::size_t i = 0; i < values.size(); ++i) {
            const auto hi = static_cast<unsigned char>(bytes[i * stride]);
            values[i] = stride == 1 ? hi : (Level{hi} << 8) | static_cast<unsigned char>(bytes[i * stride + 1]);
            if (values[i] > maxval) throw io_error("PGM sample exceeds maxval");
        }
    }
    return GridImage(width, height, std::move(values), depth);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw io_error("cannot read " + path);
    return data;
}

inline GridImage read_pgm(const std::string& path) { return parse_pgm(read_file(path)); }

// Binary 16-bit greymap (maxval 65535, big-endian samples).
inline std::string encode_pgm16(std::size_t width, std::size_t height, std::span<const Level> values) {
    if (values.size() != width * height) throw invalid_input("raster size mismatch");
    std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n65535\n";
    out.reserve(out.size() + 2 * values.size());
    for (auto v : values) {
        if (v > 65535) throw invalid_input("value " + std::to_string(v) + " does not fit in 16 bits");
        out.push_back(static_cast<char>(v >> 8));
        out.push_back(static_cast<char>(v & 0xff));
    }
    return out;
}

inline void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw io_error("write to " + path + " failed");
}

inline void write_pgm16(const std::string& path, const ScalarMap& map) {
    write_file(path, encode_pgm16(map.width, map.height, map.values));
}

}  // namespace hierseg

#endif
