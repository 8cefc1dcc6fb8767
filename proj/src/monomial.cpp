#include "apolar/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "apolar/errors.hpp"

namespace apolar {

ExponentVector::ExponentVector(std::size_t num_vars) : exps_(num_vars, 0) {
    if (num_vars == 0) throw std::invalid_argument("ExponentVector: at least one variable required");
}

ExponentVector::ExponentVector(std::vector<value_type> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw std::invalid_argument("ExponentVector: at least one variable required");
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::size_t{0});
}

ExponentVector::ExponentVector(std::initializer_list<value_type> exponents)
    : ExponentVector(std::vector<value_type>(exponents)) {}

ExponentVector ExponentVector::unit(std::size_t num_vars, std::size_t var, value_type power) {
    ExponentVector e(num_vars);
    e.increment(var, power);
    return e;
}

void ExponentVector::increment(std::size_t k, value_type by) {
    exps_.at(k) += by;
    degree_ += by;
}

void ExponentVector::decrement(std::size_t k) {
    if (exps_.at(k) == 0) throw std::invalid_argument("ExponentVector: decrement of zero exponent");
    --exps_[k];
    --degree_;
}

bool ExponentVector::divides(const ExponentVector& other) const {
    if (size() != other.size()) throw std::invalid_argument("divides: variable count mismatch");
    for (std::size_t k = 0; k < size(); ++k)
        if (exps_[k] > other.exps_[k]) return false;
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
    if (size() != other.size()) throw std::invalid_argument("operator+: variable count mismatch");
    ExponentVector out = *this;
    for (std::size_t k = 0; k < size(); ++k) out.exps_[k] += other.exps_[k];
    out.degree_ += other.degree_;
    return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& rhs) const {
    if (!rhs.divides(*this)) throw std::invalid_argument("operator-: divisor does not divide");
    ExponentVector out = *this;
    for (std::size_t k = 0; k < size(); ++k) out.exps_[k] -= rhs.exps_[k];
    out.degree_ -= rhs.degree_;
    return out;
}

std::strong_ordering ExponentVector::operator<=>(const ExponentVector& other) const {
    if (auto c = size() <=> other.size(); c != 0) return c;
    return exps_ <=> other.exps_;
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("gcd: variable count mismatch");
    std::vector<ExponentVector::value_type> e(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) e[k] = std::min(a[k], b[k]);
    return ExponentVector(std::move(e));
}

std::uint64_t tau(std::size_t n, std::size_t d) {
    if (n == 0) throw std::invalid_argument("tau: n must be at least 1");
    // C(n-1+d, d) built incrementally; every partial product is itself a binomial.
    std::uint64_t result = 1;
    const std::size_t k = std::min(d, n - 1);
    const std::size_t top = n - 1 + d;
    for (std::size_t i = 1; i <= k; ++i) {
        const std::uint64_t num = top - k + i;
        if (result > UINT64_MAX / num) throw GuardViolation("tau: value exceeds 64 bits");
        result = result * num / i;
    }
    return result;
}

namespace {

void fill_T(std::vector<ExponentVector::value_type>& cur, std::size_t pos, std::size_t remaining,
            std::vector<ExponentVector>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = static_cast<ExponentVector::value_type>(remaining);
        out.emplace_back(cur);
        return;
    }
    for (std::size_t e = 0; e <= remaining; ++e) {
        cur[pos] = static_cast<ExponentVector::value_type>(e);
        fill_T(cur, pos + 1, remaining - e, out);
    }
}

}  // namespace

std::vector<ExponentVector> enumerate_T(std::size_t n, std::size_t d) {
    if (n == 0) throw std::invalid_argument("enumerate_T: n must be at least 1");
    std::vector<ExponentVector> out;
    out.reserve(tau(n, d));
    std::vector<ExponentVector::value_type> cur(n, 0);
    fill_T(cur, 0, d, out);
    return out;
}

std::size_t lex_rank(const ExponentVector& m) {
    // Count the monomials that precede m: for each position, all choices of a
    // smaller exponent there with any completion of the remaining degree.
    const std::size_t n = m.size();
    std::size_t remaining = m.degree();
    std::size_t rank = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t e = 0; e < m[k]; ++e) rank += tau(n - k - 1, remaining - e);
        remaining -= m[k];
    }
    return rank;
}

std::strong_ordering lex_compare(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("lex_compare: unequal lengths");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return a[k] <=> b[k];
    return std::strong_ordering::equal;
}

DerivativeResult D_k(const ExponentVector& i, std::size_t k) {
    if (k >= i.size()) throw std::out_of_range("D_k: variable index out of range");
    if (i[k] == 0) return std::nullopt;
    ExponentVector out = i;
    out.decrement(k);
    return out;
}

ExponentVector d_k(const ExponentVector& i, std::size_t k) {
    if (i.size() < 2) throw std::invalid_argument("d_k: needs at least two coordinates");
    if (k >= i.size()) throw std::out_of_range("d_k: variable index out of range");
    std::vector<ExponentVector::value_type> e(i.exponents().begin(), i.exponents().end());
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(k));
    return ExponentVector(std::move(e));
}

std::size_t h_nd(const ExponentVector& i) {
    for (std::size_t k = i.size(); k-- > 0;)
        if (i[k] >= 1) return k;
    throw std::invalid_argument("h_nd: zero exponent vector");
}

ExponentVector c_nd(const ExponentVector& i) {
    ExponentVector out = i;
    out.decrement(h_nd(i));
    return out;
}

ExponentVector c_nd_0(const ExponentVector& j) {
    for (const auto& l : enumerate_T(j.size(), j.degree() + 1))
        if (c_nd(l) == j) return l;  // enumeration is lex-ascending
    throw InvariantError("c_nd_0: empty preimage");
}

std::vector<ExponentVector> c_nd_0_image(std::size_t n, std::size_t d) {
    if (d == 0) throw std::invalid_argument("c_nd_0_image: degree must be at least 1");
    std::set<ExponentVector> seen;
    std::vector<ExponentVector> out;
    for (const auto& l : enumerate_T(n, d))
        if (seen.insert(c_nd(l)).second) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> Z1_set(std::size_t n, std::size_t d) {
    if (n < 2 || d < 2) throw std::invalid_argument("Z1_set: requires n >= 2 and d >= 2");
    const auto basis = enumerate_T(n, d - 1);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k][n - 1] >= 1) out.push_back(k);
    return out;
}

std::vector<std::size_t> Z2_set(std::size_t n, std::size_t d) {
    if (n < 2 || d < 3) throw std::invalid_argument("Z2_set: requires n >= 2 and d >= 3");
    const auto basis = enumerate_T(n, d - 1);
    std::vector<ExponentVector> image;
    for (const auto& j : enumerate_T(n, d - 2)) image.push_back(c_nd_0(j));
    std::sort(image.begin(), image.end());
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (std::binary_search(image.begin(), image.end(), basis[k])) out.push_back(k);
    return out;
}

}  // namespace apolar
