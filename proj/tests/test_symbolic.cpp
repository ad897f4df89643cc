#include <doctest.h>

#include "eideal/enumerate.hpp"
#include "eideal/symbolic.hpp"
#include "util.hpp"

using namespace eideal;
using tu::cycle_graph;
using tu::ideal_of;
using tu::mono;
using tu::path_graph;

TEST_CASE("edge ideal lives in the ambient ring") {
    const MonomialIdeal I = edge_ideal(cycle_graph(3));
    CHECK(I == ideal_of(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
    CHECK(edge_ideal(SimpleGraph::from_edges(4, {})).is_zero());

    // Deleting a vertex keeps the ring: 4 variables, fewer generators.
    const SimpleGraph paw = SimpleGraph::from_edges(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    const MonomialIdeal J = edge_ideal(paw.delete_vertex(4));
    CHECK(J.vars() == 4);
    CHECK(J == ideal_of(4, {{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}}));
}

TEST_CASE("cover primes intersect to the edge ideal") {
    for (const SimpleGraph& g : {cycle_graph(5), path_graph(4), cycle_graph(3)}) {
        const CoverPrimeSet cp = cover_primes(g);
        REQUIRE(cp.covers.size() == cp.primes.size());
        MonomialIdeal acc = MonomialIdeal::whole_ring(g.ambient());
        for (const auto& p : cp.primes) acc = intersect(acc, p);
        CHECK(acc == edge_ideal(g));
    }
    CHECK(cover_primes(cycle_graph(5)).covers.size() == 5);
}

TEST_CASE("symbolic powers of the triangle") {
    const SimpleGraph g = cycle_graph(3);
    CHECK(symbolic_power(g, 1) == edge_ideal(g));
    CHECK(symbolic_power(g, 2) ==
          ideal_of(3, {{1, 1, 1}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}}));
    // The squared edge ideal is strictly smaller: x1x2x3 is symbolic-only.
    CHECK(symbolic_power(g, 2).contains(mono({1, 1, 1})));
    CHECK_FALSE(power(edge_ideal(g), 2).contains(mono({1, 1, 1})));

    CHECK_THROWS_AS((void)symbolic_power(g, 0), ArgumentError);
    CHECK_THROWS_AS((void)symbolic_power(SimpleGraph::from_edges(2, {}), 1),
                    ArgumentError);
    CHECK_THROWS_AS((void)symbolic_power(cycle_graph(5), 3, 10), ResourceError);
}

TEST_CASE("symbolic membership matches the constructed ideal") {
    const SimpleGraph g = cycle_graph(3);
    CHECK(symbolic_member(g, mono({1, 1, 1}), 2));
    CHECK(symbolic_member(g, mono({2, 2, 0}), 2));
    CHECK_FALSE(symbolic_member(g, mono({1, 2, 0}), 2));
    CHECK_FALSE(symbolic_member(g, mono({3, 0, 0}), 2));
    CHECK_THROWS_AS((void)symbolic_member(g, mono({1, 1}), 2), DimensionError);
}

TEST_CASE("bipartite graphs collapse symbolic to ordinary") {
    for (const SimpleGraph& g : {path_graph(4), cycle_graph(4), cycle_graph(6)}) {
        for (int s = 1; s <= 3; ++s) {
            CHECK(symbolic_power(g, s) == power(edge_ideal(g), s));
        }
    }
}

TEST_CASE("odd cycle symbolic sum formula") {
    for (int n : {3, 5, 7}) {
        const SimpleGraph c = cycle_graph(n);
        for (int s = 1; s <= 4; ++s) {
            CHECK(odd_cycle_symbolic_sum(c, s) == symbolic_power(c, s));
        }
    }
    CHECK_THROWS_AS((void)odd_cycle_symbolic_sum(cycle_graph(4), 2), ArgumentError);
    CHECK_THROWS_AS((void)odd_cycle_symbolic_sum(path_graph(3), 2), ArgumentError);
    const SimpleGraph paw = SimpleGraph::from_edges(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    CHECK_THROWS_AS((void)odd_cycle_symbolic_sum(paw, 2), ArgumentError);
}

TEST_CASE("mixed ideals") {
    const SimpleGraph paw = SimpleGraph::from_edges(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    const SimpleGraph h1 = paw.edge_subgraph({{1, 2}, {2, 3}, {1, 3}});
    const SimpleGraph h2 = paw.edge_subgraph({{3, 4}});
    const MonomialIdeal m = mixed_ideal(h1, 2, h2);
    CHECK(m == sum(symbolic_power(h1, 2), edge_ideal(h2)));
    CHECK(m.vars() == 4);

    // Edgeless first part: plain edge ideal of the second.
    const SimpleGraph none = paw.edge_subgraph({});
    CHECK(mixed_ideal(none, 2, h2) == edge_ideal(h2));

    CHECK_THROWS_AS((void)mixed_ideal(h1, 2, paw), ArgumentError);  // shared edges
    CHECK_THROWS_AS((void)mixed_ideal(h1, 0, h2), ArgumentError);
    CHECK_THROWS_AS((void)mixed_ideal(cycle_graph(3), 2, h2), ArgumentError);
}

TEST_CASE("powers sit inside symbolic powers on the corpus") {
    for (int n = 3; n <= 5; ++n) {
        for (const auto& g : enumerate_unicyclic(n)) {
            const MonomialIdeal I = edge_ideal(g);
            for (int s = 1; s <= 3; ++s) {
                const MonomialIdeal sym = symbolic_power(g, s);
                CHECK(sym.contains_ideal(power(I, s)));
                CHECK(I.contains_ideal(sym));
            }
        }
    }
}
