#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "apolar/monomial.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/rational_matrix.hpp"

namespace apolar {

/// Positional variable naming: x1..x{num_x} followed by u1..u{num_u}.
/// Operators (elements of the dual ring) print with capital letters.
struct VariableNames {
    std::size_t num_x = 0;
    std::size_t num_u = 0;
    bool dual = false;

    static VariableNames plain(std::size_t n) { return {n, 0, false}; }
    VariableNames as_dual() const { return {num_x, num_u, true}; }
    std::size_t total() const { return num_x + num_u; }
    std::string name(std::size_t var) const;
};

/// Syntax or semantic error in polynomial text, with the byte offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }
    /// Message without the offset suffix.
    const std::string& detail() const { return detail_; }

private:
    std::size_t offset_;
    std::string detail_;
};

std::string format_rational(const Rational& q);
std::string format_monomial(const ExponentVector& m, const VariableNames& names);
/// Terms in descending lex order, e.g. "x1^2 + x1*x2", "3/2*x1^3 - x2^3".
std::string format_polynomial(const GradedPolynomial& f, const VariableNames& names);

/// Parses a homogeneous polynomial over x1..x{num_x}, u1..u{num_u} (capital
/// X/U accepted as well). Like terms are combined and zero terms dropped.
GradedPolynomial parse_polynomial(std::string_view text, std::size_t num_x, std::size_t num_u = 0);

/// Parses a single monomial such as "x1^2*x2" (coefficient not allowed).
ExponentVector parse_monomial(std::string_view text, std::size_t num_x, std::size_t num_u = 0);

/// Comma-separated list of monomials.
std::vector<ExponentVector> parse_support(std::string_view text, std::size_t num_x, std::size_t num_u = 0);

}  // namespace apolar
