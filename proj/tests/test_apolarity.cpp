#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apolar/apolarity.hpp"
#include "apolar/text.hpp"
#include "oracles.hpp"

using namespace apolar;
using EV = ExponentVector;

namespace {

GradedPolynomial P(const char* text, std::size_t n) { return parse_polynomial(text, n); }

// f with every coefficient c_b replaced by c_b * b!.
GradedPolynomial factorial_twist(const GradedPolynomial& f) {
    GradedPolynomial out(f.num_vars(), f.degree());
    for (const auto& [b, c] : f.terms()) {
        mpz_class w = 1;
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::uint32_t t = 2; t <= b[k]; ++t) w *= t;
        out.add_term(b, c * w);
    }
    return out;
}

mpz_class factorial_weight(const EV& t) {
    mpz_class w = 1;
    for (std::size_t k = 0; k < t.size(); ++k)
        for (std::uint32_t i = 2; i <= t[k]; ++i) w *= i;
    return w;
}

}  // namespace

TEST_CASE("contraction under both conventions") {
    const auto f = P("x1^2*x2", 2);
    CHECK(contract(P("x1*x2", 2), f) == P("x1", 2));
    CHECK(contract(P("x1^2*x2", 2), f) == GradedPolynomial::monomial(EV{0, 0}));
    CHECK(contract(P("x1^2*x2", 2), P("x1*x2^2", 2)).is_zero());
    CHECK(contract(P("x1", 1), P("x1^2", 1), PairingConvention::Differentiation) == P("2*x1", 1));
    CHECK_THROWS_AS(contract(P("x1", 1), f), std::invalid_argument);
    CHECK_THROWS_AS(contract(P("x1^4", 2), f), std::invalid_argument);
}

TEST_CASE("catalecticant of x1^2 + x1*x2 in degree 1") {
    const auto m = catalecticant_matrix(P("x1^2 + x1*x2", 2), 1);
    // rows x2, x1; columns X2, X1
    CHECK(m == RationalMatrix::from_rows({{0, 1}, {1, 1}}));
    CHECK(rank(m) == 2);
    CHECK_THROWS_AS(catalecticant_matrix(P("x1^2", 1), 3), std::invalid_argument);
    CHECK_THROWS_AS(catalecticant_matrix(P("x1^4 + x2^4 + x3^4", 3), 2, PairingConvention::DualBasis, Limits{5, 20, 16}),
                    GuardViolation);
}

TEST_CASE("annihilator dimensions and bases") {
    const auto f = P("x1^2 + x1*x2", 2);
    CHECK(ann_dimension(f, 0) == 0);
    CHECK(ann_dimension(f, 1) == 0);
    CHECK(ann_dimension(f, 2) == 2);
    CHECK(ann_dimension(f, 3) == 4);
    const auto basis = ann_basis(f, 2);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == P("x2^2", 2));
    CHECK(basis[1] == P("x1*x2 - x1^2", 2));
    CHECK(ann_basis(P("x1^5", 1), 3).empty());
}

TEST_CASE("Hilbert vectors of fixed forms") {
    CHECK(hilbert_vector(P("x1^4", 1)).entries == std::vector<std::size_t>{1, 1, 1, 1, 1});
    CHECK(hilbert_vector(P("x1^2 + x1*x2", 2)).entries == std::vector<std::size_t>{1, 2, 1});
    CHECK(hilbert_vector(parse_polynomial("x1*u2^2 + x2*u1*u2 + x3*u1^2", 3, 2)).entries ==
          std::vector<std::size_t>{1, 5, 5, 1});
    CHECK_THROWS_AS(hilbert_vector(GradedPolynomial(2, 2)), std::invalid_argument);
}

TEST_CASE("standardness") {
    CHECK(is_standard(P("x1^2 + x1*x2", 2)));
    CHECK(is_standard(P("x1^2*x2 + x1*x2^2", 2)));
    CHECK_FALSE(is_standard(P("x1^3 + x1*x2^2", 3)));
}

TEST_CASE("Hilbert vector comparison") {
    CHECK(compare_hilbert({{1, 2, 1}}, {{1, 2, 1}}) == HilbertOrder::Equal);
    CHECK(compare_hilbert({{1, 5, 5, 1}}, {{1, 5, 6, 1}}) == HilbertOrder::LessEq);
    CHECK(compare_hilbert({{1, 5, 6, 1}}, {{1, 5, 5, 1}}) == HilbertOrder::GreaterEq);
    CHECK(compare_hilbert({{1, 3, 2, 1}}, {{1, 2, 3, 1}}) == HilbertOrder::Incomparable);
    CHECK_THROWS_AS(compare_hilbert({{1, 1}}, {{1, 1, 1}}), std::invalid_argument);
    CHECK(to_string(HilbertOrder::LessEq) == "LESS_EQ");
}

TEST_CASE("random forms: Hilbert vectors agree with the pairing oracle and are symmetric") {
    std::mt19937_64 rng(7031);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const std::size_t d = 1 + rng() % 4;
        const auto f = oracle::random_form(rng, n, d);
        for (auto conv : {PairingConvention::DualBasis, PairingConvention::Differentiation}) {
            const auto h = hilbert_vector(f, conv);
            CHECK(h.entries == oracle::hilbert(oracle::to_poly(f), n, d, conv == PairingConvention::Differentiation));
            CHECK(h.is_symmetric());
            CHECK(h[0] == 1);
        }
        for (std::size_t j = 0; j <= d; ++j)
            for (const auto& op : ann_basis(f, j)) CHECK(oracle::annihilates(oracle::to_poly(op), oracle::to_poly(f)));
    }
}

TEST_CASE("differentiation catalecticant is a row-scaled dual catalecticant of the twisted form") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const std::size_t d = 1 + rng() % 4;
        const auto f = oracle::random_form(rng, n, d);
        const auto twisted = factorial_twist(f);
        for (std::size_t j = 0; j <= d; ++j) {
            const auto diff = catalecticant_matrix(f, j, PairingConvention::Differentiation);
            const auto dual = catalecticant_matrix(twisted, j, PairingConvention::DualBasis);
            const auto targets = enumerate_T(n, d - j);
            for (std::size_t r = 0; r < diff.rows(); ++r)
                for (std::size_t c = 0; c < diff.cols(); ++c)
                    CHECK(diff(r, c) * factorial_weight(targets[r]) == dual(r, c));
        }
    }
}

TEST_CASE("the two conventions can give different Hilbert vectors") {
    const auto f = P("x1^3 + x1^2*x2 + x1*x2^2 + x2^3", 2);
    CHECK(hilbert_vector(f, PairingConvention::DualBasis).entries == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(hilbert_vector(f, PairingConvention::Differentiation).entries == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(contract(P("x1^2 - x2^2", 2), f).is_zero());
}

TEST_CASE("X1^2 - c X2^2 on (x1 + x2)^3 depends on the convention") {
    const auto f = P("x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3", 2);
    const auto a = contract(P("x1^2", 2), f);
    const auto b = contract(P("x2^2", 2), f);
    CHECK(a == P("x1 + 3*x2", 2));
    CHECK(b == P("3*x1 + x2", 2));
    CHECK(rank(RationalMatrix::from_rows({a.to_vector(), b.to_vector()})) == 2);
    const auto ad = contract(P("x1^2", 2), f, PairingConvention::Differentiation);
    const auto bd = contract(P("x2^2", 2), f, PairingConvention::Differentiation);
    CHECK(ad == bd);
}

TEST_CASE("degree-1 annihilator of the sum of all monomials") {
    for (std::size_t n = 2; n <= 4; ++n) {
        GradedPolynomial f(n, 3);
        for (const auto& m : enumerate_T(n, 3)) f.add_term(m, 1);
        CHECK(ann_dimension(f, 1) == n - 1);
        RowSpan consecutive(n);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            auto op = GradedPolynomial::monomial(EV::unit(n, i)) - GradedPolynomial::monomial(EV::unit(n, i + 1));
            CHECK(contract(op, f).is_zero());
            consecutive.insert(op.to_vector());
        }
        CHECK(consecutive.size() == n - 1);
        CHECK(hilbert_vector(f)[1] == 1);
    }
}
