#ifndef EIDEAL_CANONICAL_HPP
#define EIDEAL_CANONICAL_HPP

#include <string>

#include "eideal/graph.hpp"

namespace eideal {

// Canonical relabeling of the live vertices onto 1..k (ambient k).  Two
// graphs are isomorphic iff their canonical graphs are equal.  Computed by
// iterated degree refinement with backtracking individualization, taking the
// minimum adjacency encoding over all discrete refinements.
SimpleGraph canonical_graph(const SimpleGraph& g);

// graph6 string of canonical_graph(g); usable as a dictionary key and as the
// deterministic corpus instance id.
std::string canonical_code(const SimpleGraph& g);

}  // namespace eideal

#endif
