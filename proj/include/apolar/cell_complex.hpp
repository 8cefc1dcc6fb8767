#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "apolar/monomial.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/text.hpp"

namespace apolar {

/// A cell of P(n): a monic monomial of degree k >= 1 is a (k-1)-cell.
struct Cell {
    ExponentVector monomial;

    std::size_t dimension() const { return monomial.degree() - 1; }
};

/// Face poset of a subcomplex of P(n): a divisor-closed set of monomials of
/// positive degree, ordered by divisibility. Gluing two complexes along a
/// common divisor is set union, since shared divisors are the same element.
class CellComplex {
public:
    explicit CellComplex(std::size_t num_vars) : num_vars_(num_vars) {}

    std::size_t num_vars() const { return num_vars_; }
    const std::set<ExponentVector>& cells() const { return cells_; }
    bool contains(const ExponentVector& m) const { return cells_.contains(m); }
    std::size_t top_degree() const;

    /// Cells of dimension k, lex-ascending.
    std::vector<ExponentVector> cells_of_dimension(std::size_t k) const;

    /// Adds zeta_m: every monomial of positive degree dividing m.
    void glue_monomial(const ExponentVector& m);

    bool is_divisor_closed() const;

private:
    std::size_t num_vars_;
    std::set<ExponentVector> cells_;
};

/// zeta of a homogeneous support set.
CellComplex zeta_of_support(const std::vector<ExponentVector>& support, std::size_t num_vars);
CellComplex zeta_of(const GradedPolynomial& f);

/// Number of cells of dimension <= k.
std::size_t skeleton_count(const CellComplex& c, std::size_t k);

/// (s_0, ..., s_d): s_0 = 1, s_h = number of (h-1)-cells.
std::vector<std::size_t> s_counts(const CellComplex& c, std::size_t d);

/// zeta_g is a subcomplex of zeta_h iff g divides h.
bool is_subcomplex(const ExponentVector& g, const ExponentVector& h);

/// Degree-j monomials outside the complex whose proper divisors of positive
/// degree all lie inside it.
std::vector<ExponentVector> minimal_nonfaces(const CellComplex& c, std::size_t j);

/// Face poset as JSON text: cells grouped by dimension plus covering edges.
std::string face_poset_json(const CellComplex& c, const VariableNames& names);
/// Face poset as a DOT digraph (edges point from a cell to its covers).
std::string face_poset_dot(const CellComplex& c, const VariableNames& names);

}  // namespace apolar
