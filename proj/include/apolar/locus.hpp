#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/monomial.hpp"
#include "apolar/rational_matrix.hpp"

namespace apolar {

/// Nonempty homogeneous set of monomials, stored lex-ascending without repeats.
class SupportSet {
public:
    SupportSet(std::size_t num_vars, std::vector<ExponentVector> monomials);

    std::size_t num_vars() const { return num_vars_; }
    std::size_t degree() const { return degree_; }
    const std::vector<ExponentVector>& monomials() const { return monomials_; }
    std::size_t size() const { return monomials_.size(); }
    bool operator==(const SupportSet&) const = default;

private:
    std::size_t num_vars_;
    std::size_t degree_;
    std::vector<ExponentVector> monomials_;
};

struct StConditions {
    bool stA = false;  // every variable divides some support monomial
    bool stB = false;  // each degree d-1 monomial is hit by at most one (i, j) with D_j(i) defined
    bool stC = false;  // no D_{j1}(i1) = D_{j2}(i2) with i1 != i2 and j1 != j2
    bool all() const { return stA && stB && stC; }
};

StConditions st_conditions(const SupportSet& s);

/// Every pair of distinct support monomials has gcd of degree <= d - 2.
bool gcd_condition(const SupportSet& s);

/// { D_j(i) : i in support, D_j(i) defined }, lex-ascending.
std::vector<ExponentVector> derived_set(const SupportSet& s);

struct ComponentDescriptor {
    std::vector<ExponentVector> derived;
    SupportSet support;
    std::size_t dim_support;  // |support| - 1
    std::size_t dim_paper;    // |derived| - 1
    bool operator==(const ComponentDescriptor&) const = default;
};

/// All supports over T(n,d) satisfying st.A, st.B and st.C, in lexicographic
/// order of their index lists into enumerate_T(n,d).
/// Throws GuardViolation when tau(n,d) > limits.max_locus_tau.
std::vector<ComponentDescriptor> enumerate_admissible_supports(std::size_t n, std::size_t d,
                                                               const Limits& limits = {});

/// The map phi_(n,d) on degree-d monomials in x_1..x_{tau(n,d-1)}, u_1..u_n.
/// Columns follow the lex basis of the domain, rows that of the target.
RationalMatrix phi_matrix(std::size_t n, std::size_t d, const Limits& limits = {});

/// The map psi_(n,d). The surviving x-variables x_k, k in Z2, are renumbered
/// 1..|Z2| in the target.
RationalMatrix psi_matrix(std::size_t n, std::size_t d, const Limits& limits = {});

/// Computed kernel dimension of phi or psi set against the printed formula.
struct MapCheck {
    std::string map;  // "phi" or "psi"
    std::size_t n = 0;
    std::size_t d = 0;
    bool skipped = false;
    std::string skip_reason;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    std::size_t formula = 0;
    bool matches_formula = false;
    bool surjective = false;
    /// Number of variables the map deletes; this is the quantity the printed
    /// formula counts.
    std::size_t dropped_variables = 0;
};

MapCheck check_phi(std::size_t n, std::size_t d, const Limits& limits = {});
MapCheck check_psi(std::size_t n, std::size_t d, const Limits& limits = {});

/// tau(n, d-1) - 1.
std::size_t full_perazzo_locus_dimension(std::size_t n, std::size_t d);

}  // namespace apolar
