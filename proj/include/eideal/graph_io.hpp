#ifndef EIDEAL_GRAPH_IO_HPP
#define EIDEAL_GRAPH_IO_HPP

#include <string>

#include "eideal/graph.hpp"

namespace eideal {

// Edge-list format: header line "n <count>", then one "u v" line per edge
// with 1 <= u != v <= count.  Blank lines and lines starting with '#' are
// ignored.  Parse errors carry the 1-based line number.
SimpleGraph parse_edge_list(const std::string& text);
std::string render_edge_list(const SimpleGraph& g);

// graph6 codec per the published format specification; strict (padding bits
// must be zero, length must be exact).  Parse errors carry the 0-based byte
// offset.  Encoding covers the live vertices relabeled to 1..k.
SimpleGraph parse_graph6(const std::string& text);
std::string encode_graph6(const SimpleGraph& g);

}  // namespace eideal

#endif
