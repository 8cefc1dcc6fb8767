#include "apolar/locus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace apolar {

SupportSet::SupportSet(std::size_t num_vars, std::vector<ExponentVector> monomials)
    : num_vars_(num_vars), monomials_(std::move(monomials)) {
    if (monomials_.empty()) throw std::invalid_argument("SupportSet: empty support");
    degree_ = monomials_.front().degree();
    for (const auto& m : monomials_) {
        if (m.size() != num_vars_) throw std::invalid_argument("SupportSet: variable count mismatch");
        if (m.degree() != degree_) throw std::invalid_argument("SupportSet: support is not homogeneous");
    }
    std::sort(monomials_.begin(), monomials_.end());
    monomials_.erase(std::unique(monomials_.begin(), monomials_.end()), monomials_.end());
}

StConditions st_conditions(const SupportSet& s) {
    const std::size_t n = s.num_vars();
    const auto& mons = s.monomials();
    StConditions out;

    out.stA = true;
    for (std::size_t j = 0; j < n && out.stA; ++j)
        out.stA = std::any_of(mons.begin(), mons.end(), [j](const ExponentVector& i) { return i[j] >= 1; });

    std::map<ExponentVector, std::size_t> hits;
    for (const auto& i : mons)
        for (std::size_t j = 0; j < n; ++j)
            if (auto di = D_k(i, j)) ++hits[*di];
    out.stB = std::all_of(hits.begin(), hits.end(), [](const auto& kv) { return kv.second <= 1; });

    out.stC = true;
    for (std::size_t a = 0; a < mons.size() && out.stC; ++a)
        for (std::size_t b = 0; b < mons.size() && out.stC; ++b) {
            if (a == b) continue;
            for (std::size_t j1 = 0; j1 < n && out.stC; ++j1)
                for (std::size_t j2 = 0; j2 < n && out.stC; ++j2) {
                    if (j1 == j2) continue;
                    auto d1 = D_k(mons[a], j1);
                    auto d2 = D_k(mons[b], j2);
                    if (d1 && d2 && *d1 == *d2) out.stC = false;
                }
        }
    return out;
}

bool gcd_condition(const SupportSet& s) {
    const auto& mons = s.monomials();
    for (std::size_t a = 0; a < mons.size(); ++a)
        for (std::size_t b = a + 1; b < mons.size(); ++b)
            if (gcd(mons[a], mons[b]).degree() + 2 > s.degree()) return false;
    return true;
}

std::vector<ExponentVector> derived_set(const SupportSet& s) {
    std::set<ExponentVector> out;
    for (const auto& i : s.monomials())
        for (std::size_t j = 0; j < s.num_vars(); ++j)
            if (auto di = D_k(i, j)) out.insert(*di);
    return {out.begin(), out.end()};
}

namespace {

struct Enumerator {
    std::size_t n;
    std::vector<ExponentVector> basis;
    std::vector<std::vector<std::size_t>> derived;  // lex ranks in T(n,d-1) per basis element
    std::vector<unsigned> hits;
    std::vector<unsigned> var_cover;
    std::vector<std::size_t> current;
    std::vector<ComponentDescriptor> out;

    // st.B is inherited by subsets, so any extension that breaks it is pruned.
    bool compatible(std::size_t idx) const {
        return std::none_of(derived[idx].begin(), derived[idx].end(), [this](std::size_t r) { return hits[r] > 0; });
    }

    void toggle(std::size_t idx, bool add) {
        for (auto r : derived[idx]) add ? ++hits[r] : --hits[r];
        for (std::size_t j = 0; j < n; ++j)
            if (basis[idx][j] >= 1) add ? ++var_cover[j] : --var_cover[j];
    }

    void emit() {
        if (std::find(var_cover.begin(), var_cover.end(), 0u) != var_cover.end()) return;
        std::vector<ExponentVector> mons;
        for (auto idx : current) mons.push_back(basis[idx]);
        SupportSet s(n, std::move(mons));
        if (!st_conditions(s).all()) throw InvariantError("enumerate_admissible_supports: pruned search disagrees");
        auto w = derived_set(s);
        const std::size_t dim_support = s.size() - 1;
        const std::size_t dim_paper = w.size() - 1;
        out.push_back({std::move(w), std::move(s), dim_support, dim_paper});
    }

    void extend(std::size_t start) {
        if (!current.empty()) emit();
        for (std::size_t idx = start; idx < basis.size(); ++idx) {
            if (!compatible(idx)) continue;
            current.push_back(idx);
            toggle(idx, true);
            extend(idx + 1);
            toggle(idx, false);
            current.pop_back();
        }
    }
};

}  // namespace

std::vector<ComponentDescriptor> enumerate_admissible_supports(std::size_t n, std::size_t d, const Limits& limits) {
    if (n == 0 || d == 0) throw std::invalid_argument("enumerate_admissible_supports: n and d must be positive");
    const auto size = tau(n, d);
    if (size > limits.max_locus_tau)
        throw GuardViolation("enumerate_admissible_supports: tau(n,d) = " + std::to_string(size) +
                             " exceeds the guard " + std::to_string(limits.max_locus_tau));
    Enumerator e{n, enumerate_T(n, d), {}, std::vector<unsigned>(tau(n, d - 1), 0), std::vector<unsigned>(n, 0), {}, {}};
    for (const auto& i : e.basis) {
        std::vector<std::size_t> ranks;
        for (std::size_t j = 0; j < n; ++j)
            if (auto di = D_k(i, j)) ranks.push_back(lex_rank(*di));
        e.derived.push_back(std::move(ranks));
    }
    e.extend(0);
    return std::move(e.out);
}

namespace {

void check_map_size(const char* what, std::uint64_t rows, std::uint64_t cols, const Limits& limits) {
    if (rows > limits.max_matrix_dim || cols > limits.max_matrix_dim)
        throw GuardViolation(std::string(what) + ": " + std::to_string(rows) + " x " + std::to_string(cols) +
                             " matrix exceeds the guard " + std::to_string(limits.max_matrix_dim));
}

// Splits a monomial in x_1..x_T, u_1..u_n into its x and u parts.
std::pair<std::vector<ExponentVector::value_type>, ExponentVector> split_xu(const ExponentVector& m, std::size_t t) {
    std::vector<ExponentVector::value_type> x(m.exponents().begin(), m.exponents().begin() + static_cast<std::ptrdiff_t>(t));
    std::vector<ExponentVector::value_type> u(m.exponents().begin() + static_cast<std::ptrdiff_t>(t), m.exponents().end());
    return {std::move(x), ExponentVector(std::move(u))};
}

}  // namespace

RationalMatrix phi_matrix(std::size_t n, std::size_t d, const Limits& limits) {
    if (n < 2 || d < 2) throw std::invalid_argument("phi_matrix: requires n >= 2 and d >= 2");
    const std::size_t t1 = tau(n, d - 1);
    const std::size_t t2 = tau(n - 1, d - 1);
    check_map_size("phi_matrix", tau(t2 + n - 1, d), tau(t1 + n, d), limits);
    const auto z1 = Z1_set(n, d);
    if (t1 - z1.size() != t2) throw InvariantError("phi_matrix: |Z1| does not match tau(n,d-1) - tau(n-1,d-1)");
    std::vector<bool> in_z1(t1, false);
    for (auto k : z1) in_z1[k] = true;

    const auto domain = enumerate_T(t1 + n, d);
    RationalMatrix m(tau(t2 + n - 1, d), domain.size());
    for (std::size_t c = 0; c < domain.size(); ++c) {
        const auto& mono = domain[c];
        if (mono[t1 + n - 1] >= 1) continue;
        bool killed = false;
        for (auto k : z1) killed = killed || mono[k] >= 1;
        if (killed) continue;
        // Delete the Z1 coordinates and u_n.
        std::vector<ExponentVector::value_type> image;
        for (std::size_t k = 0; k < t1; ++k)
            if (!in_z1[k]) image.push_back(mono[k]);
        for (std::size_t k = 0; k + 1 < n; ++k) image.push_back(mono[t1 + k]);
        m.set(lex_rank(ExponentVector(std::move(image))), c, 1);
    }
    return m;
}

RationalMatrix psi_matrix(std::size_t n, std::size_t d, const Limits& limits) {
    if (n < 2 || d < 3) throw std::invalid_argument("psi_matrix: requires n >= 2 and d >= 3");
    const std::size_t t1 = tau(n, d - 1);
    const std::size_t t2 = tau(n, d - 2);
    check_map_size("psi_matrix", tau(t2 + n, d - 1), tau(t1 + n, d), limits);
    const auto z2 = Z2_set(n, d);
    if (z2.size() != t2) throw InvariantError("psi_matrix: |Z2| does not match tau(n,d-2)");
    std::vector<std::size_t> renumber(t1, t1);
    for (std::size_t r = 0; r < z2.size(); ++r) renumber[z2[r]] = r;

    const auto image_c0 = c_nd_0_image(t1 + n, d);
    const auto image_c0_u = c_nd_0_image(n, d - 1);
    const auto domain = enumerate_T(t1 + n, d);
    RationalMatrix m(tau(t2 + n, d - 1), domain.size());
    for (std::size_t c = 0; c < domain.size(); ++c) {
        const auto& mono = domain[c];
        const auto [x, u] = split_xu(mono, t1);
        bool killed = false;
        for (std::size_t k = 0; k < t1; ++k) killed = killed || (x[k] >= 1 && renumber[k] == t1);  // (I)
        killed = killed || !std::binary_search(image_c0.begin(), image_c0.end(), mono);           // (II)
        killed = killed || u.degree() != d - 1 ||
                 !std::binary_search(image_c0_u.begin(), image_c0_u.end(), u);                   // (III)
        if (killed) continue;
        const auto reduced = c_nd(mono);
        std::vector<ExponentVector::value_type> image(t2 + n, 0);
        for (std::size_t k = 0; k < t1; ++k)
            if (reduced[k] >= 1) image[renumber[k]] = reduced[k];
        for (std::size_t k = 0; k < n; ++k) image[t2 + k] = reduced[t1 + k];
        m.set(lex_rank(ExponentVector(std::move(image))), c, 1);
    }
    return m;
}

namespace {

MapCheck run_check(const char* name, std::size_t n, std::size_t d, std::size_t formula, std::size_t dropped,
                   RationalMatrix (*build)(std::size_t, std::size_t, const Limits&), const Limits& limits) {
    MapCheck out;
    out.map = name;
    out.n = n;
    out.d = d;
    out.formula = formula;
    out.dropped_variables = dropped;
    try {
        const auto m = build(n, d, limits);
        out.rows = m.rows();
        out.cols = m.cols();
        out.rank = rank(m);
        out.kernel_dim = out.cols - out.rank;
        out.matches_formula = out.kernel_dim == out.formula;
        out.surjective = out.rank == out.rows;
    } catch (const GuardViolation& e) {
        out.skipped = true;
        out.skip_reason = e.what();
    }
    return out;
}

}  // namespace

MapCheck check_phi(std::size_t n, std::size_t d, const Limits& limits) {
    if (n < 2 || d < 2) throw std::invalid_argument("check_phi: requires n >= 2 and d >= 2");
    const std::size_t formula = tau(n, d - 1) - tau(n - 1, d - 1) + 1;
    return run_check("phi", n, d, formula, Z1_set(n, d).size() + 1, &phi_matrix, limits);
}

MapCheck check_psi(std::size_t n, std::size_t d, const Limits& limits) {
    if (n < 2 || d < 3) throw std::invalid_argument("check_psi: requires n >= 2 and d >= 3");
    const std::size_t formula = tau(n, d - 1) - tau(n, d - 2);
    return run_check("psi", n, d, formula, tau(n, d - 1) - Z2_set(n, d).size(), &psi_matrix, limits);
}

std::size_t full_perazzo_locus_dimension(std::size_t n, std::size_t d) {
    if (n < 2 || d < 2) throw std::invalid_argument("full_perazzo_locus_dimension: requires n >= 2 and d >= 2");
    return tau(n, d - 1) - 1;
}

}  // namespace apolar
