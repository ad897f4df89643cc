#include <doctest.h>

#include "eideal/linalg.hpp"

using namespace eideal;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace

TEST_CASE("rational rank on small matrices") {
    CHECK(rank_rational(IntMatrix(0, 0)) == 0);
    CHECK(rank_rational(IntMatrix(3, 2)) == 0);
    CHECK(rank_rational(from_rows({{1, 0}, {0, 1}})) == 2);
    CHECK(rank_rational(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_rational(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    CHECK(rank_rational(from_rows({{0, 0}, {0, 5}})) == 1);
    CHECK(rank_rational(from_rows({{2, 0, 0}, {0, 0, 7}})) == 2);
}

TEST_CASE("rank needing big intermediate values") {
    // Wilkinson-style growth: ±1 off-diagonal band with large pivots forces
    // 64-bit overflow in fraction-free elimination on moderate sizes.
    const int n = 24;
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) m.at(i, j) = 1000003;
            else m.at(i, j) = (i + j) % 2 == 0 ? 1 : -1;
        }
    }
    CHECK(rank_rational(m) == n);
}

TEST_CASE("rank over prime fields") {
    const IntMatrix m = from_rows({{2, 0}, {0, 3}});
    CHECK(rank_mod_p(m, 5) == 2);
    CHECK(rank_mod_p(m, 2) == 1);
    CHECK(rank_mod_p(m, 3) == 1);
    CHECK(rank_mod_p(from_rows({{-1, 1}, {1, -1}}), 2) == 1);
    CHECK_THROWS_AS((void)rank_mod_p(m, 4), ArgumentError);
    CHECK_THROWS_AS((void)rank_mod_p(m, 1), ArgumentError);

    // A matrix whose rank drops only in characteristic 2.
    const IntMatrix k = from_rows({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(rank_rational(k) == 3);
    CHECK(rank_mod_p(k, 2) == 2);
    CHECK(rank_mod_p(k, 3) == 3);
}

TEST_CASE("field values") {
    const Field q = Field::rationals();
    CHECK(q.characteristic() == 0);
    CHECK(q.str() == "q");
    const Field f = Field::prime(32003);
    CHECK(f.characteristic() == 32003);
    CHECK(f.str() == "fp:32003");
    CHECK(Field::parse("q") == q);
    CHECK(Field::parse("fp:7") == Field::prime(7));
    CHECK_THROWS_AS((void)Field::parse("fp:6"), ArgumentError);
    CHECK_THROWS_AS((void)Field::parse("r"), ParseError);
    CHECK_THROWS_AS((void)Field::prime(0), ArgumentError);

    const IntMatrix m = from_rows({{2, 0}, {0, 3}});
    CHECK(rank(m, q) == 2);
    CHECK(rank(m, Field::prime(3)) == 1);
}
