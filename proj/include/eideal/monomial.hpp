#ifndef EIDEAL_MONOMIAL_HPP
#define EIDEAL_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "eideal/errors.hpp"

namespace eideal {

// A monomial in a fixed polynomial ring K[x1..xn], stored as its exponent
// vector. The all-zeros vector is the unit monomial 1. Exponents are
// unsigned 32-bit; arithmetic that would wrap throws OverflowError.
class Monomial {
  public:
    using Exponent = std::uint32_t;

    explicit Monomial(std::size_t vars) : exps_(vars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    static Monomial unit(std::size_t vars) { return Monomial(vars); }
    // x_i (0-based variable index).
    static Monomial variable(std::size_t vars, std::size_t i);

    std::size_t vars() const { return exps_.size(); }
    Exponent exp(std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }

    std::uint64_t degree() const;
    bool is_unit() const;
    std::vector<int> support() const;

    bool divides(const Monomial& other) const;
    Monomial times(const Monomial& other) const;
    // this / gcd(this, m); always well defined.
    Monomial quotient_by_gcd(const Monomial& m) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    // Rendering: "x1^2*x2"; the unit monomial renders as "1".
    std::string str() const;

  private:
    std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// Total order used for canonical generator storage and text rendering:
// ascending total degree, ties broken by descending lexicographic
// comparison of exponent vectors (so x-heavy monomials print first).
bool render_less(const Monomial& a, const Monomial& b);

void check_same_vars(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

struct ExponentVectorHash {
    std::size_t operator()(const std::vector<Monomial::Exponent>& v) const;
};

}  // namespace eideal

#endif
