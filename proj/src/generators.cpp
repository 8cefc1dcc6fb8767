#include "apolar/generators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "apolar/apolarity.hpp"
#include "apolar/cell_complex.hpp"

namespace apolar {

namespace {

using Subset = std::vector<ExponentVector>;

GradedPolynomial sum_of(const Subset& s, std::size_t num_vars, std::size_t degree) {
    GradedPolynomial p(num_vars, degree);
    for (const auto& m : s) p.add_term(m, 1);
    return p;
}

// Inserts every monomial multiple of degree j of the given generators.
void add_multiples(RowSpan& span, const std::vector<GradedPolynomial>& gens, std::size_t num_vars, std::size_t j) {
    for (const auto& g : gens) {
        if (g.degree() > j) continue;
        for (const auto& m : enumerate_T(num_vars, j - g.degree()))
            span.insert(multiply(GradedPolynomial::monomial(m), g).to_vector());
    }
}

}  // namespace

std::vector<GradedPolynomial> GeneratorSet::operators() const {
    std::vector<GradedPolynomial> out;
    for (const auto& p : powers)
        out.push_back(GradedPolynomial::monomial(
            ExponentVector::unit(num_vars, p.var, static_cast<ExponentVector::value_type>(p.exponent))));
    for (const auto& [deg, monos] : nonfaces)
        for (const auto& m : monos) out.push_back(GradedPolynomial::monomial(m));
    for (const auto& [deg, pairs] : differences)
        for (const auto& [p1, p2] : pairs) out.push_back(p1 - p2);
    return out;
}

std::vector<ImageClass> equal_image_classes(const GradedPolynomial& f, std::size_t j, const Limits& limits) {
    const std::size_t n = f.num_vars();
    const auto cat = catalecticant_matrix(f, j, PairingConvention::DualBasis, limits);
    const auto sources = enumerate_T(n, j);

    std::vector<std::size_t> live;  // non-annihilating columns
    for (std::size_t c = 0; c < cat.cols(); ++c)
        for (std::size_t r = 0; r < cat.rows(); ++r)
            if (cat(r, c) != 0) {
                live.push_back(c);
                break;
            }
    if (live.size() > limits.max_class_monomials)
        throw GuardViolation("equal_image_classes: " + std::to_string(live.size()) +
                             " non-annihilating monomials exceed the subset guard " +
                             std::to_string(limits.max_class_monomials));

    // Integer images after clearing one common denominator.
    mpz_class common = 1;
    for (auto c : live)
        for (std::size_t r = 0; r < cat.rows(); ++r)
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), cat(r, c).get_den_mpz_t());
    const long bound = std::numeric_limits<long>::max() / static_cast<long>(live.size() + 1);
    std::vector<std::vector<long>> columns(live.size(), std::vector<long>(cat.rows()));
    for (std::size_t i = 0; i < live.size(); ++i)
        for (std::size_t r = 0; r < cat.rows(); ++r) {
            const mpz_class v = cat(r, live[i]).get_num() * (common / cat(r, live[i]).get_den());
            if (!v.fits_slong_p() || abs(v) > bound) throw GuardViolation("equal_image_classes: coefficients too large");
            columns[i][r] = v.get_si();
        }

    std::map<std::vector<long>, std::vector<Subset>> groups;
    const std::size_t k = live.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<long> image(cat.rows(), 0);
        Subset subset;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(mask >> i & 1)) continue;
            subset.push_back(sources[live[i]]);
            for (std::size_t r = 0; r < image.size(); ++r) image[r] += columns[i][r];
        }
        groups[std::move(image)].push_back(std::move(subset));
    }

    std::vector<ImageClass> out;
    for (auto& [image, members] : groups) {
        std::sort(members.begin(), members.end());
        RationalVector v(image.size());
        for (std::size_t r = 0; r < image.size(); ++r) v[r] = Rational(mpz_class(image[r]), common);
        out.push_back({GradedPolynomial::from_vector(n, f.degree() - j, v), std::move(members)});
    }
    std::sort(out.begin(), out.end(),
              [](const ImageClass& a, const ImageClass& b) { return a.members.front() < b.members.front(); });
    return out;
}

GeneratorSet extract_generators(const GradedPolynomial& f, const ExtractOptions& options) {
    if (f.is_zero() || !f.all_coefficients_one())
        throw std::invalid_argument("extract_generators: every coefficient must be 1");
    const std::size_t n = f.num_vars();
    const std::size_t d = f.degree();
    GeneratorSet g;
    g.num_vars = n;
    g.socle_degree = d;

    const auto zeta = zeta_of(f);
    for (std::size_t j = 1; j <= d; ++j) {
        auto nf = minimal_nonfaces(zeta, j);
        if (!nf.empty()) g.nonfaces[j] = std::move(nf);
    }
    for (std::size_t k = 0; k < n; ++k) {
        const auto power = ExponentVector::unit(n, k, static_cast<ExponentVector::value_type>(d + 1));
        bool covered = false;
        for (const auto& [deg, monos] : g.nonfaces)
            for (const auto& m : monos) covered = covered || m.divides(power);
        if (!covered) g.powers.push_back({k, d + 1});
    }

    const std::size_t top = std::min(d, options.max_difference_degree.value_or(d));
    std::vector<GradedPolynomial> lower;  // generators of degree < j
    for (std::size_t j = 1; j <= top; ++j) {
        RowSpan span(tau(n, j));
        add_multiples(span, lower, n, j);
        if (auto it = g.nonfaces.find(j); it != g.nonfaces.end())
            for (const auto& m : it->second) span.insert(GradedPolynomial::monomial(m).to_vector());

        std::vector<std::pair<GradedPolynomial, GradedPolynomial>> accepted;
        for (const auto& cls : equal_image_classes(f, j, options.limits)) {
            for (std::size_t a = 1; a < cls.members.size(); ++a) {
                auto p1 = sum_of(cls.members[0], n, j);
                auto p2 = sum_of(cls.members[a], n, j);
                if (span.insert((p1 - p2).to_vector())) accepted.emplace_back(std::move(p1), std::move(p2));
            }
        }
        if (auto it = g.nonfaces.find(j); it != g.nonfaces.end())
            for (const auto& m : it->second) lower.push_back(GradedPolynomial::monomial(m));
        for (const auto& [p1, p2] : accepted) lower.push_back(p1 - p2);
        if (!accepted.empty()) g.differences[j] = std::move(accepted);
    }
    return g;
}

std::vector<std::size_t> generated_dimensions(const GeneratorSet& g, std::size_t max_degree) {
    const auto gens = g.operators();
    std::vector<std::size_t> dims;
    for (std::size_t j = 0; j <= max_degree; ++j) {
        RowSpan span(tau(g.num_vars, j));
        add_multiples(span, gens, g.num_vars, j);
        dims.push_back(span.size());
    }
    return dims;
}

bool verify_generators(const GradedPolynomial& f, const GeneratorSet& g, const Limits& limits) {
    if (g.num_vars != f.num_vars()) return false;
    const std::size_t d = f.degree();
    for (const auto& op : g.operators()) {
        if (op.num_vars() != f.num_vars()) return false;
        if (op.degree() <= d && !contract(op, f).is_zero()) return false;
    }
    const auto dims = generated_dimensions(g, d + 1);
    for (std::size_t j = 1; j <= d + 1; ++j)
        if (dims[j] != ann_dimension(f, j, PairingConvention::DualBasis, limits)) return false;
    return true;
}

}  // namespace apolar
