#ifndef EIDEAL_LINALG_HPP
#define EIDEAL_LINALG_HPP

#include <cstdint>
#include <vector>

#include "eideal/errors.hpp"
#include "eideal/field.hpp"

namespace eideal {

// Dense integer matrix, row major.  Entries stay small here (boundary maps
// have entries in {-1,0,1}) but rank computation must be exact, so the
// elimination below never rounds: it either runs fraction-free in int64 with
// overflow checks or falls back to arbitrary precision.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_, cols_;
    std::vector<std::int64_t> data_;
};

// Exact rank over the rationals (fraction-free Bareiss elimination; promotes
// to arbitrary-precision integers if int64 would overflow).
std::size_t rank_rational(const IntMatrix& m);

// Rank over Z/p, p prime.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

// Rank over the given field.
std::size_t rank(const IntMatrix& m, const Field& field);

}  // namespace eideal

#endif
