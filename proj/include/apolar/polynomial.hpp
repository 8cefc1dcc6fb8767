#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "apolar/monomial.hpp"
#include "apolar/rational_matrix.hpp"

namespace apolar {

/// Homogeneous polynomial with exact rational coefficients. The same type
/// represents forms f in R = K[x_1..x_n] and differential operators in the
/// dual ring Q = K[X_1..X_n]; which one is meant is up to the caller.
class GradedPolynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    GradedPolynomial(std::size_t num_vars, std::size_t degree);
    GradedPolynomial(std::size_t num_vars, std::size_t degree, const TermMap& terms);

    static GradedPolynomial monomial(const ExponentVector& m, const Rational& coeff = 1);
    /// Sum of the given monomials with coefficient 1. All must share one degree.
    static GradedPolynomial ones(std::size_t num_vars, const std::vector<ExponentVector>& support);

    std::size_t num_vars() const { return num_vars_; }
    std::size_t degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const ExponentVector& m) const;
    std::vector<ExponentVector> support() const;
    bool all_coefficients_one() const;

    /// Adds c * x^m. Zero results are erased.
    void add_term(const ExponentVector& m, const Rational& c);

    GradedPolynomial& operator+=(const GradedPolynomial& other);
    GradedPolynomial& operator-=(const GradedPolynomial& other);
    GradedPolynomial& operator*=(const Rational& scalar);
    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
    friend GradedPolynomial operator*(GradedPolynomial a, const Rational& s) { return a *= s; }

    bool operator==(const GradedPolynomial& other) const = default;

    /// Coefficients on enumerate_T(num_vars, degree).
    RationalVector to_vector() const;
    static GradedPolynomial from_vector(std::size_t num_vars, std::size_t degree,
                                        const RationalVector& coeffs);

private:
    void check_key(const ExponentVector& m) const;

    std::size_t num_vars_;
    std::size_t degree_;
    TermMap terms_;
};

GradedPolynomial multiply(const GradedPolynomial& a, const GradedPolynomial& b);

}  // namespace apolar
