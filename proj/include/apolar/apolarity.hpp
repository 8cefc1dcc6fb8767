#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/rational_matrix.hpp"

namespace apolar {

/// How a dual monomial X^a acts on x^b (a <= b coordinatewise, else 0).
enum class PairingConvention {
    DualBasis,        ///< X^a(x^b) = x^{b-a}; equal degrees pair as the Kronecker delta
    Differentiation,  ///< X^a(x^b) = prod b_i!/(b_i-a_i)! x^{b-a}
};

std::string_view to_string(PairingConvention conv);
PairingConvention parse_convention(std::string_view text);

/// Hilbert vector (dim A_0, ..., dim A_d).
struct HilbertVector {
    std::vector<std::size_t> entries;

    std::size_t socle_degree() const { return entries.empty() ? 0 : entries.size() - 1; }
    std::size_t operator[](std::size_t i) const { return entries[i]; }
    bool is_symmetric() const;
    bool operator==(const HilbertVector&) const = default;
};

enum class HilbertOrder { LessEq, GreaterEq, Equal, Incomparable };

std::string_view to_string(HilbertOrder order);

/// op(f). The result has degree deg f - deg op and may be zero.
GradedPolynomial contract(const GradedPolynomial& op, const GradedPolynomial& f,
                          PairingConvention conv = PairingConvention::DualBasis);

/// Matrix of Q_j -> R_{d-j}, alpha -> alpha(f). Rows follow enumerate_T(n, d-j),
/// columns enumerate_T(n, j).
RationalMatrix catalecticant_matrix(const GradedPolynomial& f, std::size_t j,
                                    PairingConvention conv = PairingConvention::DualBasis,
                                    const Limits& limits = {});

/// dim Ann(f)_j; every operator of degree > deg f annihilates.
std::size_t ann_dimension(const GradedPolynomial& f, std::size_t j,
                          PairingConvention conv = PairingConvention::DualBasis,
                          const Limits& limits = {});

/// Canonical basis of Ann(f)_j as operator polynomials.
std::vector<GradedPolynomial> ann_basis(const GradedPolynomial& f, std::size_t j,
                                        PairingConvention conv = PairingConvention::DualBasis,
                                        const Limits& limits = {});

HilbertVector hilbert_vector(const GradedPolynomial& f,
                             PairingConvention conv = PairingConvention::DualBasis,
                             const Limits& limits = {});

/// Ann(f)_1 = 0.
bool is_standard(const GradedPolynomial& f, PairingConvention conv = PairingConvention::DualBasis,
                 const Limits& limits = {});

/// Coordinatewise comparison. Throws std::invalid_argument on different lengths.
HilbertOrder compare_hilbert(const HilbertVector& a, const HilbertVector& b);

}  // namespace apolar
