#include "eideal/symbolic.hpp"

#include <algorithm>

namespace eideal {

MonomialIdeal edge_ideal(const SimpleGraph& g) {
    const std::size_t n = g.ambient();
    std::vector<Monomial> gens;
    for (const auto& [u, v] : g.edges()) {
        std::vector<Monomial::Exponent> e(n, 0);
        e[u - 1] = 1;
        e[v - 1] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(n, std::move(gens));
}

CoverPrimeSet cover_primes(const SimpleGraph& g) {
    CoverPrimeSet out;
    out.vars = g.ambient();
    out.covers = g.minimal_vertex_covers();
    out.primes.reserve(out.covers.size());
    for (const auto& cover : out.covers) {
        std::vector<Monomial> vars;
        vars.reserve(cover.size());
        for (int v : cover) vars.push_back(Monomial::variable(g.ambient(), v - 1));
        out.primes.push_back(MonomialIdeal::make(g.ambient(), std::move(vars)));
    }
    return out;
}

namespace {

void check_power_args(const SimpleGraph& g, int s) {
    if (s < 1) throw ArgumentError("power must be >= 1, got " + std::to_string(s));
    if (g.edge_count() == 0) throw ArgumentError("graph has no edges");
}

// p_A^s directly: all monomials of degree s in the cover's variables.
MonomialIdeal cover_prime_power(int vars, const std::vector<int>& cover, int s) {
    std::vector<int> support;
    support.reserve(cover.size());
    for (int v : cover) support.push_back(v - 1);
    return MonomialIdeal::make(
        vars, monomials_of_degree(vars, static_cast<std::uint32_t>(s), support));
}

}  // namespace

MonomialIdeal symbolic_power(const SimpleGraph& g, int s, std::size_t basis_cap) {
    check_power_args(g, s);
    const auto covers = g.minimal_vertex_covers();
    MonomialIdeal acc = MonomialIdeal::whole_ring(g.ambient());
    for (const auto& cover : covers) {
        const MonomialIdeal pw = cover_prime_power(g.ambient(), cover, s);
        if (acc.generator_count() * pw.generator_count() > basis_cap) {
            throw ResourceError(
                "symbolic power intermediate basis exceeds the cap of " +
                std::to_string(basis_cap) + " products");
        }
        acc = intersect(acc, pw);
    }
    return acc;
}

bool symbolic_member(const SimpleGraph& g, const Monomial& m, int s) {
    if (s < 1) throw ArgumentError("power must be >= 1, got " + std::to_string(s));
    if (m.vars() != static_cast<std::size_t>(g.ambient())) {
        throw DimensionError("monomial has " + std::to_string(m.vars()) +
                             " variables, graph ring has " + std::to_string(g.ambient()));
    }
    for (const auto& cover : g.minimal_vertex_covers()) {
        std::uint64_t total = 0;
        for (int v : cover) total += m.exp(v - 1);
        if (total < static_cast<std::uint64_t>(s)) return false;
    }
    return true;
}

MonomialIdeal odd_cycle_symbolic_sum(const SimpleGraph& cycle, int s) {
    check_power_args(cycle, s);
    const auto verts = cycle.vertices();
    const std::size_t len = verts.size();
    bool is_cycle = cycle.edge_count() == len && cycle.is_connected();
    for (int v : verts) {
        if (cycle.degree(v) != 2) is_cycle = false;
    }
    if (!is_cycle || len % 2 == 0) {
        throw ArgumentError("graph is not an odd cycle");
    }
    const int m = static_cast<int>((len - 1) / 2);
    std::vector<Monomial::Exponent> ve(cycle.ambient(), 0);
    for (int v : verts) ve[v - 1] = 1;
    const Monomial v_mono{ve};
    const MonomialIdeal I = edge_ideal(cycle);

    std::vector<Monomial> gens;
    Monomial vt = Monomial::unit(cycle.ambient());
    for (int t = 0; t * (m + 1) <= s; ++t) {
        const int rem = s - t * (m + 1);
        if (rem == 0) {
            gens.push_back(vt);
        } else {
            const MonomialIdeal pw = power(I, static_cast<std::uint32_t>(rem));
            for (const auto& u : pw.generators()) {
                gens.push_back(u.times(vt));
            }
        }
        vt = vt.times(v_mono);
    }
    return MonomialIdeal::make(cycle.ambient(), std::move(gens));
}

MonomialIdeal mixed_ideal(const SimpleGraph& h1, int s, const SimpleGraph& h2,
                          std::size_t basis_cap) {
    if (s < 1) throw ArgumentError("power must be >= 1, got " + std::to_string(s));
    if (h1.ambient() != h2.ambient()) {
        throw ArgumentError("subgraphs live in different ambient rings (" +
                            std::to_string(h1.ambient()) + " vs " +
                            std::to_string(h2.ambient()) + " vertices)");
    }
    const auto e1 = h1.edges();
    const auto e2 = h2.edges();
    for (const auto& e : e1) {
        if (std::binary_search(e2.begin(), e2.end(), e)) {
            throw ArgumentError("subgraphs share edge " + std::to_string(e.first) + " " +
                                std::to_string(e.second));
        }
    }
    const MonomialIdeal left = h1.edge_count() == 0
                                   ? MonomialIdeal::zero(h1.ambient())
                                   : symbolic_power(h1, s, basis_cap);
    return sum(left, edge_ideal(h2));
}

}  // namespace eideal
