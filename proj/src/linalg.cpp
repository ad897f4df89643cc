#include "eideal/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace eideal {

namespace {

using BigInt = boost::multiprecision::cpp_int;

inline bool mul_checked(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return !__builtin_mul_overflow(a, b, &out);
}
inline bool sub_checked(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return !__builtin_sub_overflow(a, b, &out);
}
inline bool mul_checked(const BigInt& a, const BigInt& b, BigInt& out) {
    out = a * b;
    return true;
}
inline bool sub_checked(const BigInt& a, const BigInt& b, BigInt& out) {
    out = a - b;
    return true;
}

// Fraction-free Bareiss elimination with row/column pivoting.  Entries after
// pivot step k are (k+1)x(k+1) minors of the input, so every division below
// is exact.  Returns nullopt if the integer type overflowed (int64 path).
template <typename Int>
std::optional<std::size_t> bareiss_rank(std::vector<std::vector<Int>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t piv = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && piv < rows; ++c) {
        std::size_t sel = piv;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != piv) std::swap(a[sel], a[piv]);
        for (std::size_t i = piv + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int t1, t2, t3;
                if (!mul_checked(a[i][j], a[piv][c], t1)) return std::nullopt;
                if (!mul_checked(a[i][c], a[piv][j], t2)) return std::nullopt;
                if (!sub_checked(t1, t2, t3)) return std::nullopt;
                a[i][j] = t3 / prev;
            }
            a[i][c] = 0;
        }
        prev = a[piv][c];
        ++piv;
    }
    return piv;
}

}  // namespace

std::size_t rank_rational(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    {
        std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
        if (auto rk = bareiss_rank(std::move(a))) return *rk;
    }
    // int64 overflowed somewhere; redo in arbitrary precision.
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
    auto rk = bareiss_rank(std::move(a));
    return *rk;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return pow_mod(a, p - 2, p);
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
    if (!is_prime(p)) {
        throw ArgumentError("modulus must be prime, got " + std::to_string(p));
    }
    if (p >= (std::uint64_t(1) << 31)) {
        throw ArgumentError("modulus too large: " + std::to_string(p));
    }
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            std::int64_t v = m.at(r, c) % static_cast<std::int64_t>(p);
            if (v < 0) v += static_cast<std::int64_t>(p);
            a[r][c] = static_cast<std::uint64_t>(v);
        }
    }
    std::size_t piv = 0;
    for (std::size_t c = 0; c < cols && piv < rows; ++c) {
        std::size_t sel = piv;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != piv) std::swap(a[sel], a[piv]);
        const std::uint64_t inv = inv_mod(a[piv][c], p);
        for (std::size_t i = piv + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const std::uint64_t f = a[i][c] * inv % p;
            a[i][c] = 0;
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (a[piv][j] == 0) continue;
                const std::uint64_t sub = f * a[piv][j] % p;
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        ++piv;
    }
    return piv;
}

std::size_t rank(const IntMatrix& m, const Field& field) {
    if (field.is_rational()) return rank_rational(m);
    return rank_mod_p(m, field.characteristic());
}

}  // namespace eideal
