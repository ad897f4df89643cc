#ifndef EIDEAL_TESTS_UTIL_HPP
#define EIDEAL_TESTS_UTIL_HPP

#include <vector>

#include "eideal/graph.hpp"
#include "eideal/ideal.hpp"

namespace tu {

inline eideal::Monomial mono(std::vector<eideal::Monomial::Exponent> e) {
    return eideal::Monomial(std::move(e));
}

inline eideal::MonomialIdeal ideal_of(
    std::size_t vars, std::vector<std::vector<eideal::Monomial::Exponent>> rows) {
    std::vector<eideal::Monomial> gens;
    gens.reserve(rows.size());
    for (auto& r : rows) gens.push_back(eideal::Monomial(std::move(r)));
    return eideal::MonomialIdeal::make(vars, std::move(gens));
}

inline eideal::SimpleGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return eideal::SimpleGraph::from_edges(n, edges);
}

inline eideal::SimpleGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n; ++v) edges.emplace_back(v, v % n + 1);
    return eideal::SimpleGraph::from_edges(n, edges);
}

}  // namespace tu

#endif
