#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "apolar/apolarity.hpp"
#include "apolar/locus.hpp"
#include "apolar/perazzo.hpp"
#include "oracles.hpp"

using namespace apolar;
using EV = ExponentVector;

namespace {

// Independent admissibility test on plain exponent vectors.
bool oracle_admissible(const std::vector<oracle::Mono>& s, unsigned n, unsigned d) {
    for (unsigned j = 0; j < n; ++j) {
        bool hit = false;
        for (const auto& i : s) hit = hit || i[j] > 0;
        if (!hit) return false;
    }
    for (const auto& target : oracle::monomials(n, d - 1)) {
        int pairs = 0;
        for (const auto& i : s)
            for (unsigned j = 0; j < n; ++j) {
                auto up = target;
                ++up[j];
                if (up == i) ++pairs;
            }
        if (pairs > 1) return false;
    }
    for (const auto& a : s)
        for (const auto& b : s)
            for (unsigned j1 = 0; j1 < n; ++j1)
                for (unsigned j2 = 0; j2 < n; ++j2) {
                    if (a == b || j1 == j2 || a[j1] == 0 || b[j2] == 0) continue;
                    auto da = a, db = b;
                    --da[j1];
                    --db[j2];
                    if (da == db) return false;
                }
    return true;
}

std::set<std::vector<oracle::Mono>> enumerated(unsigned n, unsigned d, const Limits& limits = {}) {
    std::set<std::vector<oracle::Mono>> out;
    for (const auto& c : enumerate_admissible_supports(n, d, limits)) {
        std::vector<oracle::Mono> s;
        for (const auto& m : c.support.monomials()) s.push_back(oracle::to_mono(m));
        std::sort(s.begin(), s.end());
        out.insert(s);
    }
    return out;
}

SupportSet powers(std::size_t n, std::uint32_t d) {
    std::vector<EV> mons;
    for (std::size_t k = 0; k < n; ++k) mons.push_back(EV::unit(n, k, d));
    return SupportSet(n, mons);
}

}  // namespace

TEST_CASE("support sets") {
    CHECK_THROWS_AS(SupportSet(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(SupportSet(2, {EV{2, 0}, EV{0, 1}}), std::invalid_argument);
    const SupportSet s(2, {EV{0, 2}, EV{2, 0}, EV{0, 2}});
    CHECK(s.size() == 2);
    CHECK(s.monomials().front() == EV{0, 2});
}

TEST_CASE("st conditions on fixed supports") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint32_t d = 2; d <= 4; ++d) CHECK(st_conditions(powers(n, d)).all());
    CHECK(st_conditions(powers(1, 1)).all());
    CHECK_FALSE(st_conditions(powers(2, 1)).stB);
    const auto mixed = st_conditions(SupportSet(2, {EV{2, 1}, EV{1, 2}}));
    CHECK(mixed.stA);
    CHECK_FALSE(mixed.stC);
    CHECK_FALSE(mixed.stB);
    CHECK_FALSE(st_conditions(SupportSet(2, {EV{2, 0}})).stA);
    const auto lo = st_conditions(SupportSet(2, {EV{2, 0}, EV{1, 1}}));
    CHECK_FALSE(lo.stB);
    CHECK_FALSE(lo.stC);
}

TEST_CASE("st conditions and linear-algebra standardness are different notions") {
    const SupportSet s(2, {EV{2, 1}, EV{1, 2}});
    CHECK_FALSE(st_conditions(s).all());
    CHECK(is_standard(GradedPolynomial::ones(2, s.monomials())));
}

TEST_CASE("gcd condition") {
    CHECK(gcd_condition(powers(2, 3)));
    CHECK_FALSE(gcd_condition(SupportSet(2, {EV{2, 1}, EV{1, 2}})));
    CHECK(gcd_condition(SupportSet(2, {EV{2, 1}})));
}

TEST_CASE("enumeration agrees with exhaustive subset scans") {
    for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
        const auto basis = oracle::monomials(n, d);
        std::set<std::vector<oracle::Mono>> expect;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << basis.size()); ++mask) {
            std::vector<oracle::Mono> s;
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (mask >> i & 1) s.push_back(basis[i]);
            if (oracle_admissible(s, n, d)) expect.insert(s);
        }
        CHECK_MESSAGE(enumerated(n, d) == expect, "n=" << n << " d=" << d);
    }
}

TEST_CASE("enumeration: fixed members, dimensions, gcd, determinism") {
    const auto s22 = enumerated(2, 2);
    CHECK(s22.contains({{0, 2}, {2, 0}}));
    CHECK_FALSE(s22.contains({{1, 1}, {2, 0}}));

    const auto single = enumerate_admissible_supports(1, 5);
    REQUIRE(single.size() == 1);
    CHECK(single[0].dim_support == 0);
    CHECK(single[0].dim_paper == 0);

    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t d = 2; d <= 3; ++d) {
            const auto comps = enumerate_admissible_supports(n, d);
            CHECK(comps == enumerate_admissible_supports(n, d));
            bool power_sum = false;
            for (const auto& c : comps) {
                CHECK(gcd_condition(c.support));
                CHECK(c.dim_support + 1 == c.support.size());
                CHECK(c.dim_paper + 1 == c.derived.size());
                CHECK(c.derived == derived_set(c.support));
                if (c.support.monomials() == powers(n, static_cast<std::uint32_t>(d)).monomials()) {
                    power_sum = true;
                    CHECK(c.dim_support == n - 1);
                }
            }
            CHECK(power_sum);
        }
    CHECK_THROWS_AS(enumerate_admissible_supports(3, 5), GuardViolation);
}

TEST_CASE("full Perazzo supports are admissible") {
    for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 2}}) {
        const auto f = build_perazzo(PerazzoSpec::full(n, d));
        Limits wide;
        wide.max_locus_tau = 25;
        bool found = false;
        for (const auto& c : enumerate_admissible_supports(f.num_vars(), d, wide))
            if (c.support.monomials() == f.support()) {
                found = true;
                CHECK(c.dim_support == full_perazzo_locus_dimension(n, d));
            }
        CHECK(found);
    }
}

TEST_CASE("full Perazzo locus dimension") {
    CHECK(full_perazzo_locus_dimension(2, 2) == 1);
    CHECK(full_perazzo_locus_dimension(2, 3) == 2);
    CHECK(full_perazzo_locus_dimension(3, 2) == 2);
    CHECK_THROWS_AS(full_perazzo_locus_dimension(1, 2), std::invalid_argument);
}

TEST_CASE("phi: coordinate projection with the closed-form kernel") {
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t d = 2; d <= 4; ++d) {
            const auto m = phi_matrix(n, d);
            const std::size_t t1 = tau(n, d - 1);
            const std::size_t t2 = tau(n - 1, d - 1);
            CHECK(m.cols() == tau(t1 + n, d));
            CHECK(m.rows() == tau(t2 + n - 1, d));
            const auto r = rank(m);
            CHECK(r == m.rows());
            CHECK(m.cols() - r == tau(t1 + n, d) - tau(t2 + n - 1, d));
            const auto domain = enumerate_T(t1 + n, d);
            for (std::size_t c = 0; c < domain.size(); ++c) {
                std::size_t nonzero = 0;
                for (std::size_t row = 0; row < m.rows(); ++row) nonzero += m(row, c) != 0;
                if (domain[c][t1 + n - 1] >= 1) CHECK(nonzero == 0);
                CHECK(nonzero <= 1);
            }
            const auto check = check_phi(n, d);
            CHECK(check.kernel_dim == m.cols() - r);
            CHECK(check.formula == t1 - t2 + 1);
            CHECK(check.dropped_variables == check.formula);
            CHECK(check.surjective);
        }
    CHECK_THROWS_AS(phi_matrix(1, 3), std::invalid_argument);
}

TEST_CASE("psi: image and kernel") {
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t d = 3; d <= 4; ++d) {
            const auto m = psi_matrix(n, d);
            const std::size_t t1 = tau(n, d - 1);
            const std::size_t t2 = tau(n, d - 2);
            CHECK(m.cols() == tau(t1 + n, d));
            CHECK(m.rows() == tau(t2 + n, d - 1));
            const auto r = rank(m);
            CHECK(r == t2 * t2);
            for (std::size_t c = 0; c < m.cols(); ++c) {
                std::size_t nonzero = 0;
                for (std::size_t row = 0; row < m.rows(); ++row) nonzero += m(row, c) != 0;
                CHECK(nonzero <= 1);
            }
            const auto check = check_psi(n, d);
            CHECK(check.rank == r);
            CHECK(check.formula == t1 - t2);
            CHECK(check.dropped_variables == check.formula);
            CHECK_FALSE(check.surjective);
        }
    CHECK_THROWS_AS(psi_matrix(2, 2), std::invalid_argument);
}

TEST_CASE("map checks respect the matrix guard") {
    const auto big = check_phi(3, 5);
    CHECK(big.skipped);
    Limits small;
    small.max_matrix_dim = 10;
    CHECK_THROWS_AS(phi_matrix(2, 3, small), GuardViolation);
    CHECK(check_psi(2, 3, small).skipped);
}
