#ifndef QX_GRAPH6_HPP
#define QX_GRAPH6_HPP

#include <string>
#include <string_view>

#include "qx/graph.hpp"

namespace qx {

// Standard graph6 encoding: bit-packed upper triangle in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ..., six bits per printable byte,
// offset 63. Orders up to 62 use the one-byte header; 63 and 64 use the
// '~' three-byte header.
std::string encode_graph6(const Graph& g);

// Throws std::invalid_argument on malformed input. An optional
// ">>graph6<<" prefix is stripped.
Graph decode_graph6(std::string_view text);

}  // namespace qx

#endif
