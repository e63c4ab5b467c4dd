#pragma once

#include <string>
#include <string_view>

#include "spexkm/graph.hpp"

namespace spexkm {

/// Standard graph6 text (no ">>graph6<<" header, no trailing newline).
std::string graph6_encode(const Graph& g);

/// Inverse of graph6_encode. Throws ParseError with the offending byte offset;
/// trailing whitespace is ignored.
Graph graph6_decode(std::string_view text);

}  // namespace spexkm
