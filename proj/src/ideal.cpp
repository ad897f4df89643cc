#include "eideal/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace eideal {

namespace {

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.vars() != b.vars())
        throw DimensionError("ideals live in rings with different variable counts");
}

void check_member_ring(const MonomialIdeal& a, const Monomial& m) {
    if (a.vars() != m.vars())
        throw DimensionError("monomial does not live in the ideal's ring");
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    // Dedup first; divisibility scans only need to look at lower degrees.
    std::unordered_set<Monomial, MonomialHash> seen;
    std::vector<Monomial> uniq;
    uniq.reserve(gens.size());
    for (auto& g : gens)
        if (seen.insert(g).second) uniq.push_back(std::move(g));
    std::sort(uniq.begin(), uniq.end(), render_less);

    std::vector<Monomial> out;
    for (const auto& g : uniq) {
        bool redundant = false;
        for (const auto& kept : out) {
            if (kept.degree() > g.degree()) break;
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(g);
    }
    return out;
}

MonomialIdeal MonomialIdeal::zero(std::size_t vars) {
    return MonomialIdeal(vars, {});
}

MonomialIdeal MonomialIdeal::whole_ring(std::size_t vars) {
    return MonomialIdeal(vars, {Monomial::unit(vars)});
}

MonomialIdeal MonomialIdeal::make(std::size_t vars, std::vector<Monomial> gens) {
    for (const auto& g : gens)
        if (g.vars() != vars)
            throw DimensionError("generator does not live in the ideal's ring");
    return MonomialIdeal(vars, minimalize(std::move(gens)));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    check_member_ring(*this, m);
    std::uint64_t dm = m.degree();
    for (const auto& g : gens_) {
        if (g.degree() > dm) break;
        if (g.divides(m)) return true;
    }
    return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
    check_same_ring(*this, other);
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

std::string MonomialIdeal::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].str();
    }
    return os.str();
}

MonomialIdeal sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    check_same_ring(lhs, rhs);
    std::vector<Monomial> gens = lhs.generators();
    gens.insert(gens.end(), rhs.generators().begin(), rhs.generators().end());
    return MonomialIdeal::make(lhs.vars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    check_same_ring(lhs, rhs);
    std::vector<Monomial> gens;
    gens.reserve(lhs.generator_count() * rhs.generator_count());
    for (const auto& a : lhs.generators())
        for (const auto& b : rhs.generators()) gens.push_back(a.times(b));
    return MonomialIdeal::make(lhs.vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::uint32_t exponent) {
    MonomialIdeal acc = MonomialIdeal::whole_ring(ideal.vars());
    for (std::uint32_t i = 0; i < exponent; ++i) acc = product(acc, ideal);
    return acc;
}

MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    check_same_ring(lhs, rhs);
    std::vector<Monomial> gens;
    gens.reserve(lhs.generator_count() * rhs.generator_count());
    for (const auto& a : lhs.generators())
        for (const auto& b : rhs.generators()) gens.push_back(lcm(a, b));
    return MonomialIdeal::make(lhs.vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
    check_member_ring(ideal, m);
    std::vector<Monomial> gens;
    gens.reserve(ideal.generator_count());
    for (const auto& g : ideal.generators()) gens.push_back(g.quotient_by_gcd(m));
    return MonomialIdeal::make(ideal.vars(), std::move(gens));
}

std::vector<Monomial> monomials_of_degree(std::size_t vars, std::uint32_t d,
                                          const std::vector<int>& support) {
    std::vector<Monomial> out;
    if (support.empty()) {
        if (d == 0) out.push_back(Monomial::unit(vars));
        return out;
    }
    std::vector<Monomial::Exponent> exps(vars, 0);
    // Distribute d over the support positions, rightmost slot takes the rest.
    auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
        if (pos + 1 == support.size()) {
            exps[support[pos]] = left;
            out.push_back(Monomial(exps));
            exps[support[pos]] = 0;
            return;
        }
        for (std::uint32_t take = 0; take <= left; ++take) {
            exps[support[pos]] = take;
            self(self, pos + 1, left - take);
        }
        exps[support[pos]] = 0;
    };
    rec(rec, 0, d);
    return out;
}

MonomialIdeal intersect_max_power(const MonomialIdeal& ideal, std::uint32_t d) {
    if (d < 1) throw ArgumentError("intersect_max_power needs d >= 1");
    std::vector<int> all_vars(ideal.vars());
    for (std::size_t i = 0; i < ideal.vars(); ++i) all_vars[i] = static_cast<int>(i);

    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        std::uint64_t deg = g.degree();
        if (deg >= d) {
            gens.push_back(g);
            continue;
        }
        for (const auto& pad :
             monomials_of_degree(ideal.vars(), d - static_cast<std::uint32_t>(deg), all_vars))
            gens.push_back(g.times(pad));
    }
    return MonomialIdeal::make(ideal.vars(), std::move(gens));
}

}  // namespace eideal
