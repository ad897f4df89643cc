#ifndef EIDEAL_GRAPH_HPP
#define EIDEAL_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eideal/errors.hpp"

namespace eideal {

// The unique cycle of a unicyclic graph: vertices in cyclic order (starting
// at the smallest label, toward its smaller neighbor) and the edge list.
struct Cycle {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;  // sorted, each pair (u < v)
};

// Simple undirected graph on vertices 1..n.  A graph remembers the ambient
// vertex count of the original graph it was derived from: vertex deletions
// shrink the live vertex set but keep the ambient count, so ideals of
// subgraphs live in the same polynomial ring as the parent's.
class SimpleGraph {
  public:
    static SimpleGraph empty(int n);
    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int ambient() const { return ambient_; }
    int vertex_count() const;
    std::vector<int> vertices() const;
    bool has_vertex(int v) const;

    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // sorted, each (u < v)
    bool has_edge(int u, int v) const;

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<int> closed_neighbors(int v) const;

    SimpleGraph delete_vertices(const std::vector<int>& U) const;
    SimpleGraph delete_vertex(int v) const { return delete_vertices({v}); }
    SimpleGraph delete_edge(int u, int v) const;
    SimpleGraph induced_subgraph(const std::vector<int>& W) const;
    // Subgraph with the same vertex set but only the given edges.
    SimpleGraph edge_subgraph(const std::vector<std::pair<int, int>>& edges) const;

    // BFS distance from x to the nearest vertex of W; nullopt = unreachable.
    std::optional<int> distance_to_set(int x, const std::vector<int>& W) const;

    // The unique cycle when the graph has exactly one independent cycle;
    // nullopt for forests; NotUnicyclicError when two or more.
    std::optional<Cycle> unique_cycle() const;

    // All minimal vertex covers (complements of maximal independent sets),
    // each sorted, the list ordered by size then lexicographically.
    std::vector<std::vector<int>> minimal_vertex_covers() const;

    // Induced matching number; exact search, capped at 16 live vertices.
    int induced_matching_number() const;

    bool is_bipartite() const;
    std::vector<int> leaves() const;
    bool is_connected() const;

    bool operator==(const SimpleGraph& other) const;

    std::string str() const;

  private:
    SimpleGraph(int ambient, std::uint64_t present, std::vector<std::uint64_t> adj)
        : ambient_(ambient), present_(present), adj_(std::move(adj)) {}

    void check_vertex(int v) const;
    std::uint64_t component_mask(int bit) const;

    int ambient_;
    std::uint64_t present_;
    std::vector<std::uint64_t> adj_;
};

}  // namespace eideal

#endif
