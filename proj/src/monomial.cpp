#include "eideal/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace eideal {

Monomial Monomial::variable(std::size_t vars, std::size_t i) {
    if (i >= vars) throw ArgumentError("variable index out of range");
    Monomial m(vars);
    m.exps_[i] = 1;
    return m;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (Exponent e : exps_) d += e;
    return d;
}

bool Monomial::is_unit() const {
    for (Exponent e : exps_)
        if (e != 0) return false;
    return true;
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0) s.push_back(static_cast<int>(i));
    return s;
}

bool Monomial::divides(const Monomial& other) const {
    check_same_vars(*this, other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    check_same_vars(*this, other);
    Monomial out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        Exponent s = exps_[i] + other.exps_[i];
        if (s < exps_[i]) throw OverflowError("exponent overflow in monomial product");
        out.exps_[i] = s;
    }
    return out;
}

Monomial Monomial::quotient_by_gcd(const Monomial& m) const {
    check_same_vars(*this, m);
    Monomial out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out.exps_[i] = exps_[i] - std::min(exps_[i], m.exps_[i]);
    return out;
}

std::string Monomial::str() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (exps_[i] > 1) os << "^" << exps_[i];
        first = false;
    }
    return os.str();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    std::vector<Monomial::Exponent> e(a.vars());
    for (std::size_t i = 0; i < a.vars(); ++i) e[i] = std::max(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    std::vector<Monomial::Exponent> e(a.vars());
    for (std::size_t i = 0; i < a.vars(); ++i) e[i] = std::min(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

bool render_less(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() > b.exponents();
}

void check_same_vars(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars())
        throw DimensionError("monomials live in rings with different variable counts");
}

std::size_t ExponentVectorHash::operator()(
    const std::vector<Monomial::Exponent>& v) const {
    // FNV-1a over the exponent words.
    std::size_t h = 1469598103934665603ull;
    for (Monomial::Exponent e : v) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    return ExponentVectorHash{}(m.exponents());
}

}  // namespace eideal
