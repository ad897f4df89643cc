#ifndef EIDEAL_IDEAL_HPP
#define EIDEAL_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "eideal/monomial.hpp"

namespace eideal {

// A monomial ideal, stored by its unique minimal generating set, kept
// sorted in render order. The zero ideal has no generators; the unit
// ideal has the single generator 1. Values are immutable; every
// operation returns a fresh, minimalized ideal.
class MonomialIdeal {
  public:
    static MonomialIdeal zero(std::size_t vars);
    static MonomialIdeal whole_ring(std::size_t vars);
    // Minimalizes (and dedups) the given generators.
    static MonomialIdeal make(std::size_t vars, std::vector<Monomial> gens);

    std::size_t vars() const { return vars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_whole_ring() const { return gens_.size() == 1 && gens_[0].is_unit(); }

    bool contains(const Monomial& m) const;
    bool contains_ideal(const MonomialIdeal& other) const;

    bool operator==(const MonomialIdeal& other) const {
        return vars_ == other.vars_ && gens_ == other.gens_;
    }
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

    // "x1^2*x2, x2*x3"; the zero ideal renders as "0".
    std::string str() const;

  private:
    MonomialIdeal(std::size_t vars, std::vector<Monomial> gens)
        : vars_(vars), gens_(std::move(gens)) {}

    std::size_t vars_ = 0;
    std::vector<Monomial> gens_;
};

// Divisibility-minimal subset of `gens`, sorted in render order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal power(const MonomialIdeal& ideal, std::uint32_t exponent);
MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
// (I : m) = ideal of u/gcd(u, m) over generators u.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
// I ∩ m^d where m = (x1..xn): generators padded up to total degree d.
MonomialIdeal intersect_max_power(const MonomialIdeal& ideal, std::uint32_t d);

// All monomials of total degree exactly d in the variables listed in
// `support` (0-based indices into a ring with `vars` variables).
std::vector<Monomial> monomials_of_degree(std::size_t vars, std::uint32_t d,
                                          const std::vector<int>& support);

}  // namespace eideal

#endif
