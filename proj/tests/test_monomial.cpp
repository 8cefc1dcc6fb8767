#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "apolar/errors.hpp"
#include "apolar/monomial.hpp"
#include "oracles.hpp"

using namespace apolar;
using EV = ExponentVector;

TEST_CASE("tau values") {
    CHECK(tau(2, 3) == 4);
    CHECK(tau(3, 2) == 6);
    CHECK(tau(5, 0) == 1);
    CHECK(tau(1, 7) == 1);
    CHECK_THROWS_AS(tau(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(tau(200, 200), GuardViolation);
}

TEST_CASE("tau satisfies Pascal's recurrence and matches enumeration") {
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned d = 0; d <= 8; ++d) {
            CHECK(tau(n, d) == oracle::tau(n, d));
            if (n >= 2 && d >= 1) CHECK(tau(n, d) == tau(n - 1, d) + tau(n, d - 1));
            CHECK(enumerate_T(n, d).size() == tau(n, d));
        }
}

TEST_CASE("enumerate_T is lex-ascending and complete") {
    CHECK(enumerate_T(2, 2) == std::vector<EV>{EV{0, 2}, EV{1, 1}, EV{2, 0}});
    CHECK(enumerate_T(1, 4) == std::vector<EV>{EV{4}});
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 0; d <= 4; ++d) {
            const auto got = enumerate_T(n, d);
            const auto want = oracle::monomials(n, d);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(oracle::to_mono(got[i]) == want[i]);
                CHECK(lex_rank(got[i]) == i);
            }
        }
}

TEST_CASE("lex_compare") {
    CHECK(lex_compare(EV{1, 2}, EV{2, 1}) == std::strong_ordering::less);
    CHECK(lex_compare(EV{2, 1}, EV{2, 0}) == std::strong_ordering::greater);
    CHECK(lex_compare(EV{3, 0, 1}, EV{3, 0, 1}) == std::strong_ordering::equal);
    CHECK_THROWS_AS(lex_compare(EV{1}, EV{1, 0}), std::invalid_argument);
}

TEST_CASE("D_k and d_k") {
    CHECK(D_k(EV{2, 1}, 1) == EV{2, 0});
    CHECK_FALSE(D_k(EV{2, 0}, 1).has_value());
    CHECK(D_k(EV{1, 1, 1}, 0) == EV{0, 1, 1});
    CHECK(d_k(EV{2, 1, 3}, 1) == EV{2, 3});
    CHECK(d_k(EV{0, 5}, 0) == EV{5});
    CHECK(d_k(EV{1, 1, 0}, 2) == EV{1, 1});
    CHECK_THROWS_AS(d_k(EV{3}, 0), std::invalid_argument);
    CHECK_THROWS_AS(D_k(EV{3}, 1), std::out_of_range);
}

TEST_CASE("h, c and c0") {
    CHECK(h_nd(EV{1, 0, 2}) == 2);
    CHECK(h_nd(EV{4, 0, 0}) == 0);
    CHECK(h_nd(EV{0, 1, 0}) == 1);
    CHECK_THROWS_AS(h_nd(EV{0, 0}), std::invalid_argument);
    CHECK(c_nd(EV{1, 0, 2}) == EV{1, 0, 1});
    CHECK(c_nd(EV{0, 3}) == EV{0, 2});
    CHECK(c_nd(EV{2, 1, 0}) == EV{2, 0, 0});
    CHECK(c_nd_0(EV{1, 0, 1}) == EV{1, 0, 2});
    CHECK(c_nd_0(EV{0, 2}) == EV{0, 3});
    CHECK(c_nd_0(EV{4}) == EV{5});
}

TEST_CASE("c0 is the lex-minimal preimage, checked against a full scan") {
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned d = 0; d <= 3; ++d)
            for (const auto& j : enumerate_T(n, d)) {
                std::vector<EV> pre;
                for (const auto& l : enumerate_T(n, d + 1))
                    if (c_nd(l) == j) pre.push_back(l);
                REQUIRE_FALSE(pre.empty());
                CHECK(c_nd_0(j) == *std::min_element(pre.begin(), pre.end()));
            }
}

TEST_CASE("c0 image in one scan matches pointwise c0") {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 1; d <= 4; ++d) {
            std::vector<EV> pointwise;
            for (const auto& j : enumerate_T(n, d - 1)) pointwise.push_back(c_nd_0(j));
            std::sort(pointwise.begin(), pointwise.end());
            CHECK(c_nd_0_image(n, d) == pointwise);
        }
}

TEST_CASE("Z sets") {
    CHECK(Z1_set(2, 3) == std::vector<std::size_t>{0, 1});
    CHECK(Z1_set(2, 2) == std::vector<std::size_t>{0});
    CHECK(Z2_set(2, 3) == std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(Z1_set(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(Z2_set(2, 2), std::invalid_argument);
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned d = 3; d <= 5; ++d) {
            CHECK(Z1_set(n, d).size() == tau(n, d - 1) - tau(n - 1, d - 1));
            CHECK(Z2_set(n, d).size() == tau(n, d - 2));
        }
}

TEST_CASE("exponent vector arithmetic") {
    const EV a{2, 1, 0};
    const EV b{1, 1, 0};
    CHECK(b.divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK(a - b == EV{1, 0, 0});
    CHECK((a + b).degree() == 5);
    CHECK(gcd(EV{2, 1}, EV{1, 2}) == EV{1, 1});
    CHECK_THROWS_AS(b - a, std::invalid_argument);
    EV z(2);
    CHECK_THROWS_AS(z.decrement(0), std::invalid_argument);
    CHECK(EV::unit(3, 1, 4) == EV{0, 4, 0});
}
