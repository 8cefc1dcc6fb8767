#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <json.hpp>

#include "apolar/apolarity.hpp"
#include "apolar/errors.hpp"
#include "apolar/locus.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

/// f = sum_i x_i M_i in x_1..x_p, u_1..u_n, with M_i either the whole lex
/// basis of K[u]_{d-1} (full case) or the chosen monomials.
struct PerazzoSpec {
    std::size_t n = 2;
    std::size_t d = 2;
    std::optional<std::vector<ExponentVector>> m_choice;

    static PerazzoSpec full(std::size_t n, std::size_t d) { return {n, d, std::nullopt}; }
    std::size_t num_x() const;
    /// Throws std::invalid_argument when n, d or the monomial choice is invalid.
    void validate() const;
};

/// Variables ordered x-block then u-block.
GradedPolynomial build_perazzo(const PerazzoSpec& spec);

/// in_x[k] is true when variable k belongs to the x-block.
struct VariableSplit {
    std::vector<bool> in_x;
    static VariableSplit prefix(std::size_t num_vars, std::size_t num_x);
};

/// (x-degree, u-degree) shared by every term, if there is one.
std::optional<std::pair<std::size_t, std::size_t>> is_bihomogeneous(const GradedPolynomial& f,
                                                                    const VariableSplit& split);

HilbertVector full_perazzo_hilbert(std::size_t n, std::size_t d, const Limits& limits = {});

/// Kernel of the degree-2 catalecticant split into pure monomials, +1/-1
/// binomials and the rest. Monomials are taken first, then binomials.
struct Degree2Census {
    std::size_t monomial_count = 0;
    std::size_t binomial_count = 0;
    std::size_t other_count = 0;
    std::size_t total_dim = 0;
    std::vector<ExponentVector> monomials;
    std::vector<std::pair<ExponentVector, ExponentVector>> binomials;  // first - second
};

Degree2Census degree2_census(const GradedPolynomial& f, const Limits& limits = {});

/// tau(n,2) - dim Ann(f)_2.
std::size_t h2_of(const GradedPolynomial& f, const Limits& limits = {});

/// Seed of the generator used for trial `index`: the SplitMix64 output for
/// state seed + (index + 1) * 0x9E3779B97F4A7C15. Trials draw from
/// std::mt19937_64 seeded with this value.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// True with probability p, using the top 53 bits of one draw.
bool draw_bernoulli(std::mt19937_64& rng, double p);

/// Uniform over {-9..-1, 1..9} by rejection on one or more draws.
long draw_coefficient(std::mt19937_64& rng);

struct ConjectureOptions {
    std::size_t n = 2;
    std::size_t d = 4;
    std::size_t trials = 500;
    std::uint64_t seed = 1;
    std::size_t jobs = 1;
    double inclusion_probability = 0.5;
    std::size_t max_retries = 50;
    bool timing = false;
    Limits limits;
};

struct ConjectureViolator {
    std::size_t trial;
    std::size_t attempts;
    GradedPolynomial f;
    HilbertVector hilbert;
};

struct ConjectureReport {
    ConjectureOptions options;
    std::size_t codimension = 0;
    HilbertVector h_fp;
    std::size_t less_eq = 0;  // strictly below H_FP
    std::size_t greater_eq = 0;
    std::size_t equal = 0;
    std::size_t incomparable = 0;
    std::size_t aborted = 0;  // no standard draw within max_retries
    std::vector<ConjectureViolator> violators;
    std::vector<std::pair<HilbertVector, std::size_t>> histogram;  // sorted by vector
    // Same supports with every coefficient 1, for the degree-2 annihilator bound.
    std::size_t ones_standard = 0;
    std::size_t ann2_fp = 0;
    std::size_t ones_max_ann2 = 0;
    std::size_t ones_exceeding_fp = 0;
    std::optional<double> runtime_ms;
};

/// Random standard forms of codimension n + tau(n,d-1) and degree d compared
/// with the full Perazzo Hilbert vector. Results do not depend on jobs.
ConjectureReport conjecture_sample_check(const ConjectureOptions& options);

nlohmann::ordered_json to_json(const ConjectureReport& report);

struct Lemma41Trial {
    std::size_t trial;
    GradedPolynomial f;
    HilbertVector hilbert;
    HilbertOrder order;  // H_ones against this draw
    bool holds;          // LESS_EQ or EQUAL
};

struct Lemma41Report {
    SupportSet support;
    std::uint64_t seed;
    HilbertVector h_ones;
    bool ones_standard;
    std::vector<Lemma41Trial> trials;
    std::size_t counterexamples = 0;
};

/// Compares the coefficient-1 form on `support` with random nonzero
/// coefficient draws on the same support.
Lemma41Report lemma41_check(const SupportSet& support, std::size_t trials, std::uint64_t seed,
                            const Limits& limits = {});

nlohmann::ordered_json to_json(const Lemma41Report& report);

nlohmann::ordered_json to_json(const HilbertVector& h);

}  // namespace apolar
