#include "apolar/apolarity.hpp"

#include <stdexcept>
#include <string>

namespace apolar {

namespace {

void require_nonzero(const GradedPolynomial& f, const char* what) {
    if (f.is_zero()) throw std::invalid_argument(std::string(what) + ": zero polynomial");
}

// Weight of X^a acting on x^b, assuming a divides b.
Rational pairing_weight(const ExponentVector& a, const ExponentVector& b, PairingConvention conv) {
    if (conv == PairingConvention::DualBasis) return 1;
    mpz_class w = 1;
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::uint32_t t = 0; t < a[k]; ++t) w *= b[k] - t;
    return Rational(w);
}

}  // namespace

std::string_view to_string(PairingConvention conv) {
    return conv == PairingConvention::DualBasis ? "dual" : "diff";
}

PairingConvention parse_convention(std::string_view text) {
    if (text == "dual") return PairingConvention::DualBasis;
    if (text == "diff") return PairingConvention::Differentiation;
    throw std::invalid_argument("unknown pairing convention '" + std::string(text) + "'");
}

bool HilbertVector::is_symmetric() const {
    const std::size_t n = entries.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (entries[i] != entries[n - 1 - i]) return false;
    return true;
}

std::string_view to_string(HilbertOrder order) {
    switch (order) {
        case HilbertOrder::LessEq: return "LESS_EQ";
        case HilbertOrder::GreaterEq: return "GREATER_EQ";
        case HilbertOrder::Equal: return "EQUAL";
        case HilbertOrder::Incomparable: return "INCOMPARABLE";
    }
    return "?";
}

GradedPolynomial contract(const GradedPolynomial& op, const GradedPolynomial& f, PairingConvention conv) {
    if (op.num_vars() != f.num_vars()) throw std::invalid_argument("contract: variable count mismatch");
    if (op.degree() > f.degree()) throw std::invalid_argument("contract: operator degree exceeds form degree");
    GradedPolynomial out(f.num_vars(), f.degree() - op.degree());
    for (const auto& [a, ca] : op.terms())
        for (const auto& [b, cb] : f.terms())
            if (a.divides(b)) out.add_term(b - a, ca * cb * pairing_weight(a, b, conv));
    return out;
}

RationalMatrix catalecticant_matrix(const GradedPolynomial& f, std::size_t j, PairingConvention conv,
                                    const Limits& limits) {
    const std::size_t d = f.degree();
    if (j > d) throw std::invalid_argument("catalecticant_matrix: j exceeds deg f");
    const std::size_t n = f.num_vars();
    const auto rows = tau(n, d - j);
    const auto cols = tau(n, j);
    if (rows > limits.max_matrix_dim || cols > limits.max_matrix_dim)
        throw GuardViolation("catalecticant_matrix: " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " exceeds matrix guard " + std::to_string(limits.max_matrix_dim));
    const auto targets = enumerate_T(n, d - j);
    const auto sources = enumerate_T(n, j);
    RationalMatrix m(rows, cols);
    // Each term x^b of f contributes to every (target, source) split b = t + s.
    for (const auto& [b, c] : f.terms()) {
        for (std::size_t col = 0; col < sources.size(); ++col) {
            const auto& s = sources[col];
            if (!s.divides(b)) continue;
            const auto t = b - s;
            m.set(lex_rank(t), col, c * pairing_weight(s, b, conv));
        }
    }
    return m;
}

std::size_t ann_dimension(const GradedPolynomial& f, std::size_t j, PairingConvention conv,
                          const Limits& limits) {
    if (j > f.degree()) return tau(f.num_vars(), j);
    const auto m = catalecticant_matrix(f, j, conv, limits);
    return m.cols() - rank(m);
}

std::vector<GradedPolynomial> ann_basis(const GradedPolynomial& f, std::size_t j, PairingConvention conv,
                                        const Limits& limits) {
    const auto m = catalecticant_matrix(f, j, conv, limits);
    std::vector<GradedPolynomial> out;
    for (const auto& v : kernel_basis(m)) out.push_back(GradedPolynomial::from_vector(f.num_vars(), j, v));
    return out;
}

HilbertVector hilbert_vector(const GradedPolynomial& f, PairingConvention conv, const Limits& limits) {
    require_nonzero(f, "hilbert_vector");
    HilbertVector h;
    for (std::size_t j = 0; j <= f.degree(); ++j) h.entries.push_back(rank(catalecticant_matrix(f, j, conv, limits)));
    return h;
}

bool is_standard(const GradedPolynomial& f, PairingConvention conv, const Limits& limits) {
    require_nonzero(f, "is_standard");
    if (f.degree() == 0) return false;
    return ann_dimension(f, 1, conv, limits) == 0;
}

HilbertOrder compare_hilbert(const HilbertVector& a, const HilbertVector& b) {
    if (a.entries.size() != b.entries.size())
        throw std::invalid_argument("compare_hilbert: different socle degrees are not comparable");
    bool le = true;
    bool ge = true;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (a[i] > b[i]) le = false;
        if (a[i] < b[i]) ge = false;
    }
    if (le && ge) return HilbertOrder::Equal;
    if (le) return HilbertOrder::LessEq;
    if (ge) return HilbertOrder::GreaterEq;
    return HilbertOrder::Incomparable;
}

}  // namespace apolar
