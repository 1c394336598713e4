#ifndef RAMSEY_GRAPH6_HPP
#define RAMSEY_GRAPH6_HPP

#include <string>

#include "ramsey/host.hpp"

namespace ramsey {

// Standard graph6 short form (<= 62 vertices), upper triangle column-major,
// 6 bits per printable character offset by 63.
std::string encode_graph6(const EdgeSet& edges);

// Decode against a known shape. The encoded vertex count must equal the shape
// total and every encoded edge must be a cross-part pair.
EdgeSet decode_graph6(const std::string& text, const PartiteShape& shape);

}  // namespace ramsey

#endif
