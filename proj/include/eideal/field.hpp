#ifndef EIDEAL_FIELD_HPP
#define EIDEAL_FIELD_HPP

#include <cstdint>
#include <string>

#include "eideal/errors.hpp"

namespace eideal {

// Coefficient field selector: the rationals (the default) or a prime field.
class Field {
  public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    bool operator==(const Field& other) const { return p_ == other.p_; }
    bool operator!=(const Field& other) const { return p_ != other.p_; }

    // "q" for the rationals, "fp:P" for a prime field (CLI spelling).
    std::string str() const;
    static Field parse(const std::string& text);

  private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

bool is_prime(std::uint64_t p);

}  // namespace eideal

#endif
