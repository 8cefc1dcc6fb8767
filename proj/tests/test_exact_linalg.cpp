#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apolar/rational_matrix.hpp"
#include "oracles.hpp"

using namespace apolar;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Rational(num(rng), den(rng)));
    return m;
}

std::vector<std::vector<mpq_class>> as_rows(const RationalMatrix& m) {
    std::vector<std::vector<mpq_class>> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
    return rows;
}

}  // namespace

TEST_CASE("rank of small fixed matrices") {
    CHECK(rank(RationalMatrix::from_rows({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(RationalMatrix(3, 4)) == 0);
    CHECK(rank(RationalMatrix::from_rows({{1, 1}, {2, 2}})) == 1);
    CHECK(rank(RationalMatrix::from_rows({{Rational(1, 2), Rational(1, 3)}, {3, 2}})) == 1);
    CHECK(rank(RationalMatrix(0, 5)) == 0);
}

TEST_CASE("kernel basis is canonical") {
    CHECK(kernel_basis(RationalMatrix::from_rows({{1, 0}, {0, 1}})).empty());

    const auto k = kernel_basis(RationalMatrix::from_rows({{1, 1}, {2, 2}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RationalVector{1, -1});

    const auto coord = kernel_basis(RationalMatrix::from_rows({{1, 0, 0}}));
    REQUIRE(coord.size() == 2);
    CHECK(coord[0] == RationalVector{0, 1, 0});
    CHECK(coord[1] == RationalVector{0, 0, 1});

    const auto all = kernel_basis(RationalMatrix(0, 3));
    CHECK(all.size() == 3);
}

TEST_CASE("entries are canonicalized and sizes checked") {
    RationalMatrix m(1, 1);
    m.set(0, 0, Rational(2, 4));
    CHECK(m(0, 0).get_num() == 1);
    CHECK(m(0, 0).get_den() == 2);
    CHECK_THROWS_AS(RationalMatrix(2, 2, std::vector<Rational>(3)), std::invalid_argument);
}

TEST_CASE("random matrices: rank agrees with the naive oracle, kernel is exact") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t rows = 1 + rng() % 6;
        const std::size_t cols = 1 + rng() % 6;
        auto m = random_matrix(rng, rows, cols);
        if (trial % 3 == 0 && rows > 1)  // force a dependent row
            for (std::size_t c = 0; c < cols; ++c) m.set(rows - 1, c, m(0, c) * 3 - m(1 % rows, c));
        const auto r = rank(m);
        CHECK(r == oracle::rank(as_rows(m)));
        const auto ker = kernel_basis(m);
        CHECK(ker.size() == cols - r);
        for (const auto& v : ker)
            for (const auto& x : apolar::apply(m, v)) CHECK(x == 0);
        std::vector<std::vector<mpq_class>> kr(ker.begin(), ker.end());
        CHECK(oracle::rank(kr) == ker.size());
    }
}

TEST_CASE("rref is idempotent and drops zero rows") {
    std::vector<RationalVector> rows{{2, 4, 6}, {1, 2, 3}, {0, 0, 0}, {0, 1, 1}};
    const auto pivots = reduce_to_rref(rows, 3);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(rows.size() == 2);
    auto again = rows;
    reduce_to_rref(again, 3);
    CHECK(again == rows);
}

TEST_CASE("RowSpan grows only on independent vectors") {
    RowSpan span(3);
    CHECK(span.insert({1, 1, 0}));
    CHECK(span.insert({0, 1, 1}));
    CHECK_FALSE(span.insert({1, 2, 1}));
    CHECK(span.contains({2, 0, -2}));
    CHECK_FALSE(span.contains({0, 0, 1}));
    CHECK(span.size() == 2);
    CHECK(span.insert({0, 0, 1}));
    CHECK(span.size() == 3);
}
