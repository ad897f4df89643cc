#ifndef EIDEAL_SYMBOLIC_HPP
#define EIDEAL_SYMBOLIC_HPP

#include <vector>

#include "eideal/graph.hpp"
#include "eideal/ideal.hpp"

namespace eideal {

// Minimal vertex covers of a graph together with their cover primes p_A
// (the ideal generated by the variables of cover A).  The intersection of
// the cover primes is the edge ideal.
struct CoverPrimeSet {
    int vars = 0;
    std::vector<std::vector<int>> covers;  // sorted by size, then lex
    std::vector<MonomialIdeal> primes;     // aligned with covers
};

CoverPrimeSet cover_primes(const SimpleGraph& g);

// Edge ideal I(G) in the ambient ring of g (one variable per ambient
// vertex, so subgraph ideals share the parent's ring).
MonomialIdeal edge_ideal(const SimpleGraph& g);

constexpr std::size_t kDefaultBasisCap = 1000000;

// s-th symbolic power: the intersection of p_A^s over all minimal covers A,
// folded smallest cover first.  Requires at least one edge.
MonomialIdeal symbolic_power(const SimpleGraph& g, int s,
                             std::size_t basis_cap = kDefaultBasisCap);

// Membership in I(G)^(s) without constructing the ideal: for every minimal
// cover A, the total exponent of m over A must be at least s.
bool symbolic_member(const SimpleGraph& g, const Monomial& m, int s);

// For an odd cycle C of length 2m+1 with v the product of its vertices:
// the sum over t = 0..floor(s/(m+1)) of v^t I(C)^{s-t(m+1)}.  Equals the
// symbolic power of the cycle.
MonomialIdeal odd_cycle_symbolic_sum(const SimpleGraph& cycle, int s);

// I(H1)^(s) + I(H2) in the common ambient ring; the edge sets must be
// disjoint.  An edgeless H1 contributes the zero ideal.
MonomialIdeal mixed_ideal(const SimpleGraph& h1, int s, const SimpleGraph& h2,
                          std::size_t basis_cap = kDefaultBasisCap);

}  // namespace eideal

#endif
