#ifndef EIDEAL_BETTI_HPP
#define EIDEAL_BETTI_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eideal/field.hpp"
#include "eideal/ideal.hpp"
#include "eideal/simplicial.hpp"

namespace eideal {

// Join-closure (componentwise max) of the generator multidegrees; every
// nonzero multigraded Betti number of the ideal sits at one of its elements.
struct LcmLattice {
    int vars = 0;
    std::vector<std::vector<Monomial::Exponent>> elements;  // sorted
};

constexpr std::size_t kDefaultLatticeCap = 200000;

LcmLattice lcm_lattice(const MonomialIdeal& I, std::size_t cap = kDefaultLatticeCap);

// Upper-Koszul complex of I at multidegree α: faces are the subsets W of
// supp(α) with x^α / x_W ∈ I.
SimplicialComplex upper_koszul(const MonomialIdeal& I, const Monomial& alpha);

struct BettiKey {
    int i;
    std::vector<Monomial::Exponent> alpha;
    bool operator<(const BettiKey& other) const;
    bool operator==(const BettiKey& other) const = default;
};

// Nonzero multigraded Betti numbers β_{i,α}(I); zero entries are omitted.
class BettiTable {
  public:
    explicit BettiTable(int vars = 0) : vars_(vars) {}

    int vars() const { return vars_; }
    const std::map<BettiKey, std::size_t>& entries() const { return entries_; }
    void add(int i, std::vector<Monomial::Exponent> alpha, std::size_t rank);

    // max over entries of |α| − i.
    int regularity() const;

    // Rows "i |α| α rank", one per entry, sorted by (i, |α|, α); α rendered
    // as comma-separated exponents.
    std::string str() const;

    bool operator==(const BettiTable& other) const = default;

  private:
    int vars_;
    std::map<BettiKey, std::size_t> entries_;
};

BettiTable betti_table(const MonomialIdeal& I, const Field& field, int jobs = 1,
                       std::size_t lattice_cap = kDefaultLatticeCap);

int regularity(const MonomialIdeal& I, const Field& field, int jobs = 1,
               std::size_t lattice_cap = kDefaultLatticeCap);

// Independent oracle: homology of the multidegree strands of the Taylor
// complex on the minimal generators.  nullopt when the generator count
// exceeds the cap (the oracle is unavailable, not wrong).
std::optional<BettiTable> taylor_strand_betti(const MonomialIdeal& I, const Field& field,
                                              std::size_t gen_cap = 12);

}  // namespace eideal

#endif
