#ifndef EIDEAL_ENUMERATE_HPP
#define EIDEAL_ENUMERATE_HPP

#include <vector>

#include "eideal/graph.hpp"

namespace eideal {

// Exhaustive small-graph enumeration, one canonical representative per
// isomorphism class, sorted by canonical code.  Brute force over labeled
// edge subsets with canonical-form dedup; caps keep runs at desk scale.

// Connected graphs on n vertices with exactly one cycle (n edges).
std::vector<SimpleGraph> enumerate_unicyclic(int n, int cap = 9);

// Forests on exactly n vertices with no isolated vertex (every vertex is an
// edge endpoint).
std::vector<SimpleGraph> enumerate_forests(int n, int cap = 9);

// Connected graphs on n vertices with at least one edge.
std::vector<SimpleGraph> enumerate_connected(int n, int cap = 7);

// All graphs on exactly n vertices with at least one edge (isolated vertices
// permitted).
std::vector<SimpleGraph> enumerate_all_graphs(int n, int cap = 6);

}  // namespace eideal

#endif
