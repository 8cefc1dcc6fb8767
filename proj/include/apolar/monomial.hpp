#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace apolar {

/// Exponent vector of a monic monomial x_1^{i_1} ... x_n^{i_n}.
/// Variable positions are 0-based here; user-facing text is 1-based.
class ExponentVector {
public:
    using value_type = std::uint32_t;

    explicit ExponentVector(std::size_t num_vars);
    explicit ExponentVector(std::vector<value_type> exponents);
    ExponentVector(std::initializer_list<value_type> exponents);

    static ExponentVector unit(std::size_t num_vars, std::size_t var, value_type power = 1);

    std::size_t size() const { return exps_.size(); }
    std::size_t degree() const { return degree_; }
    value_type operator[](std::size_t k) const { return exps_[k]; }
    std::span<const value_type> exponents() const { return exps_; }

    void increment(std::size_t k, value_type by = 1);
    void decrement(std::size_t k);

    /// Coordinatewise: true iff this divides other.
    bool divides(const ExponentVector& other) const;

    ExponentVector operator+(const ExponentVector& other) const;
    /// Requires rhs to divide *this.
    ExponentVector operator-(const ExponentVector& rhs) const;

    bool operator==(const ExponentVector& other) const { return exps_ == other.exps_; }
    /// Length first, then lexicographic with the first coordinate dominant.
    std::strong_ordering operator<=>(const ExponentVector& other) const;

private:
    std::vector<value_type> exps_;
    std::size_t degree_ = 0;
};

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);

/// Number of monomials of degree d in n variables, C(n+d-1, d).
std::uint64_t tau(std::size_t n, std::size_t d);

/// T(n,d) in ascending lexicographic order; its size is tau(n,d).
std::vector<ExponentVector> enumerate_T(std::size_t n, std::size_t d);

/// Position of `m` inside enumerate_T(m.size(), m.degree()).
std::size_t lex_rank(const ExponentVector& m);

/// Recursive lexicographic comparison, first coordinate dominant.
/// Throws std::invalid_argument on unequal lengths.
std::strong_ordering lex_compare(const ExponentVector& a, const ExponentVector& b);

/// D_k: decrement coordinate k. std::nullopt stands for -infinity
/// (coordinate k was 0), with the convention x^{-infinity} = 0.
using DerivativeResult = std::optional<ExponentVector>;
DerivativeResult D_k(const ExponentVector& i, std::size_t k);

/// d_k: delete coordinate k. Requires at least two coordinates.
ExponentVector d_k(const ExponentVector& i, std::size_t k);

/// Largest (0-based) position with a positive exponent.
std::size_t h_nd(const ExponentVector& i);

/// Decrements coordinate h_nd(i).
ExponentVector c_nd(const ExponentVector& i);

/// Lex-minimum preimage of j under c_nd, found by scanning T(n, |j|+1).
ExponentVector c_nd_0(const ExponentVector& j);

/// Image of c_{(n,d),0} over all of T(n, d-1), lex-ascending. Computed in one
/// scan of T(n,d): the first element met with a given c_nd value is the minimum.
std::vector<ExponentVector> c_nd_0_image(std::size_t n, std::size_t d);

/// 0-based positions k in the lex basis M of K[u_1..u_n]_{d-1} with u_n | M_k.
std::vector<std::size_t> Z1_set(std::size_t n, std::size_t d);

/// 0-based positions k in the same basis with M_k in the image of c_{(n,d-1),0}.
std::vector<std::size_t> Z2_set(std::size_t n, std::size_t d);

}  // namespace apolar
