#include "eideal/field.hpp"

namespace eideal {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d <= p / d; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) {
        throw ArgumentError("field characteristic must be prime, got " + std::to_string(p));
    }
    if (p >= (std::uint64_t(1) << 31)) {
        throw ArgumentError("prime field characteristic too large: " + std::to_string(p));
    }
    return Field(p);
}

std::string Field::str() const {
    if (is_rational()) return "q";
    return "fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("fp:", 0) == 0) {
        const std::string num = text.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("bad field spec '" + text + "'", 0);
        }
        std::uint64_t p = 0;
        try {
            p = std::stoull(num);
        } catch (const std::exception&) {
            throw ParseError("bad field spec '" + text + "'", 0);
        }
        return prime(p);
    }
    throw ParseError("bad field spec '" + text + "' (expected q or fp:P)", 0);
}

}  // namespace eideal
