#include "apolar/polynomial.hpp"

#include <stdexcept>

namespace apolar {

GradedPolynomial::GradedPolynomial(std::size_t num_vars, std::size_t degree)
    : num_vars_(num_vars), degree_(degree) {
    if (num_vars == 0) throw std::invalid_argument("GradedPolynomial: at least one variable required");
}

GradedPolynomial::GradedPolynomial(std::size_t num_vars, std::size_t degree, const TermMap& terms)
    : GradedPolynomial(num_vars, degree) {
    for (const auto& [m, c] : terms) add_term(m, c);
}

GradedPolynomial GradedPolynomial::monomial(const ExponentVector& m, const Rational& coeff) {
    GradedPolynomial p(m.size(), m.degree());
    p.add_term(m, coeff);
    return p;
}

GradedPolynomial GradedPolynomial::ones(std::size_t num_vars, const std::vector<ExponentVector>& support) {
    if (support.empty()) throw std::invalid_argument("GradedPolynomial::ones: empty support");
    GradedPolynomial p(num_vars, support.front().degree());
    for (const auto& m : support) {
        if (p.terms_.contains(m)) throw std::invalid_argument("GradedPolynomial::ones: repeated monomial");
        p.add_term(m, 1);
    }
    return p;
}

void GradedPolynomial::check_key(const ExponentVector& m) const {
    if (m.size() != num_vars_) throw std::invalid_argument("GradedPolynomial: variable count mismatch");
    if (m.degree() != degree_) throw std::invalid_argument("GradedPolynomial: inhomogeneous term");
}

Rational GradedPolynomial::coefficient(const ExponentVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<ExponentVector> GradedPolynomial::support() const {
    std::vector<ExponentVector> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back(m);
    return out;
}

bool GradedPolynomial::all_coefficients_one() const {
    for (const auto& [m, c] : terms_)
        if (c != 1) return false;
    return true;
}

void GradedPolynomial::add_term(const ExponentVector& m, const Rational& c) {
    check_key(m);
    Rational v = c;
    v.canonicalize();
    if (v == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, v);
    if (inserted) return;
    it->second += v;
    if (it->second == 0) terms_.erase(it);
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& other) {
    if (other.num_vars_ != num_vars_ || other.degree_ != degree_)
        throw std::invalid_argument("GradedPolynomial: adding forms of different shape");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& other) {
    if (other.num_vars_ != num_vars_ || other.degree_ != degree_)
        throw std::invalid_argument("GradedPolynomial: subtracting forms of different shape");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

RationalVector GradedPolynomial::to_vector() const {
    RationalVector v(tau(num_vars_, degree_));
    for (const auto& [m, c] : terms_) v[lex_rank(m)] = c;
    return v;
}

GradedPolynomial GradedPolynomial::from_vector(std::size_t num_vars, std::size_t degree,
                                               const RationalVector& coeffs) {
    const auto basis = enumerate_T(num_vars, degree);
    if (coeffs.size() != basis.size()) throw std::invalid_argument("from_vector: wrong length");
    GradedPolynomial p(num_vars, degree);
    for (std::size_t k = 0; k < basis.size(); ++k) p.add_term(basis[k], coeffs[k]);
    return p;
}

GradedPolynomial multiply(const GradedPolynomial& a, const GradedPolynomial& b) {
    if (a.num_vars() != b.num_vars()) throw std::invalid_argument("multiply: variable count mismatch");
    GradedPolynomial out(a.num_vars(), a.degree() + b.degree());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_term(ma + mb, ca * cb);
    return out;
}

}  // namespace apolar
