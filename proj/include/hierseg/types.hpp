#ifndef HIERSEG_TYPES_HPP
#define HIERSEG_TYPES_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hierseg {

using VertexId = std::uint32_t;
using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
using Level = std::uint32_t;

inline constexpr NodeId no_node = std::numeric_limits<NodeId>::max();

// Malformed images, graphs, trees or parameters.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by operations that need a spanning structure.
class disconnected_graph : public std::runtime_error {
public:
    explicit disconnected_graph(const std::string& what) : std::runtime_error(what) {}
};

// File could not be opened, read, decoded or written.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hierseg

#endif
