#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

/// X_var^exponent.
struct PowerGenerator {
    std::size_t var;
    std::size_t exponent;
    bool operator==(const PowerGenerator&) const = default;
};

/// Generators of Ann(f) for a coefficient-1 form f, organised by kind:
/// pure powers X_k^{d+1}, minimal non-faces of zeta_f, and differences
/// P1 - P2 of coefficient-1 operators with P1(f) = P2(f).
struct GeneratorSet {
    std::size_t num_vars = 0;
    std::size_t socle_degree = 0;
    std::vector<PowerGenerator> powers;
    std::map<std::size_t, std::vector<ExponentVector>> nonfaces;
    std::map<std::size_t, std::vector<std::pair<GradedPolynomial, GradedPolynomial>>> differences;

    /// Every generator as an operator polynomial, in the order powers,
    /// non-faces by degree, differences by degree.
    std::vector<GradedPolynomial> operators() const;
};

/// Coefficient-1 operators of one degree grouped by their image on f.
struct ImageClass {
    GradedPolynomial image;
    std::vector<std::vector<ExponentVector>> members;  // supports, lex-ascending
};

/// Partition of the nonempty sets of non-annihilating degree-j monomials by
/// the image of their sum. Classes are ordered by their first member.
/// Throws GuardViolation when more than limits.max_class_monomials monomials
/// would have to be combined.
std::vector<ImageClass> equal_image_classes(const GradedPolynomial& f, std::size_t j, const Limits& limits = {});

struct ExtractOptions {
    /// Highest degree searched for differences; all degrees up to deg f when unset.
    std::optional<std::size_t> max_difference_degree;
    Limits limits;
};

/// Structured generators of Ann(f). Requires every coefficient of f to be 1.
/// X_k^{d+1} is dropped when a non-face monomial already divides it; a
/// difference is kept only when it is not in the ideal generated so far.
GeneratorSet extract_generators(const GradedPolynomial& f, const ExtractOptions& options = {});

/// Dimension, for each degree 0..max_degree, of the degree-j part of the
/// ideal generated by g.
std::vector<std::size_t> generated_dimensions(const GeneratorSet& g, std::size_t max_degree);

/// True iff every generator annihilates f and, in each degree 1..deg f + 1,
/// the generated ideal has the dimension of Ann(f)_j.
bool verify_generators(const GradedPolynomial& f, const GeneratorSet& g, const Limits& limits = {});

}  // namespace apolar
