#include "apolar/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace apolar {

namespace {

std::size_t bit_size(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

std::size_t bit_size(const Rational& q) {
    return bit_size(q.get_num()) + bit_size(q.get_den());
}

// Clears denominators of one row: returns the integer row lcm(den) * row.
std::vector<mpz_class> integer_row(std::span<const Rational> row) {
    mpz_class l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(row.size());
    for (const auto& q : row) out.emplace_back(q.get_num() * (l / q.get_den()));
    return out;
}

void divide_by_content(std::vector<mpz_class>& row, std::size_t from) {
    mpz_class g = 0;
    for (std::size_t k = from; k < row.size(); ++k) {
        if (row[k] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[k].get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (std::size_t k = from; k < row.size(); ++k)
        if (row[k] != 0) mpz_divexact(row[k].get_mpz_t(), row[k].get_mpz_t(), g.get_mpz_t());
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("RationalMatrix: entry count does not match shape");
    for (auto& e : entries_) e.canonicalize();
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("RationalMatrix: ragged rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return RationalMatrix(rows.size(), cols, std::move(entries));
}

void RationalMatrix::set(std::size_t r, std::size_t c, Rational value) {
    value.canonicalize();
    entries_.at(r * cols_ + c) = std::move(value);
}

std::size_t rank(const RationalMatrix& m) {
    std::vector<std::vector<mpz_class>> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(integer_row(m.row(r)));

    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
        std::size_t best = a.size();
        for (std::size_t i = r; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            if (best == a.size() || bit_size(a[i][c]) < bit_size(a[best][c])) best = i;
        }
        if (best == a.size()) continue;
        std::swap(a[r], a[best]);
        const auto& piv = a[r];
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), a[i][c].get_mpz_t());
            const mpz_class s = piv[c] / g;
            const mpz_class t = a[i][c] / g;
            auto& row = a[i];
            row[c] = 0;
            for (std::size_t k = c + 1; k < row.size(); ++k) {
                if (piv[k] == 0) {
                    if (row[k] != 0) row[k] *= s;
                } else {
                    row[k] = s * row[k] - t * piv[k];
                }
            }
            divide_by_content(row, c + 1);
        }
        ++r;
    }
    return r;
}

std::vector<std::size_t> reduce_to_rref(std::vector<RationalVector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t best = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            if (best == rows.size() || bit_size(rows[i][c]) < bit_size(rows[best][c])) best = i;
        }
        if (best == rows.size()) continue;
        std::swap(rows[r], rows[best]);
        auto& piv = rows[r];
        const Rational inv = 1 / piv[c];
        for (std::size_t k = c; k < cols; ++k)
            if (piv[k] != 0) piv[k] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational factor = rows[i][c];
            auto& row = rows[i];
            for (std::size_t k = c; k < cols; ++k)
                if (piv[k] != 0) row[k] -= factor * piv[k];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    const std::size_t cols = m.cols();
    std::vector<RationalVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
    const auto pivots = reduce_to_rref(rows, cols);

    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<RationalVector> kernel;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
        kernel.push_back(std::move(v));
    }
    reduce_to_rref(kernel, cols);
    return kernel;
}

RationalVector apply(const RationalMatrix& m, std::span<const Rational> v) {
    if (v.size() != m.cols()) throw std::invalid_argument("apply: dimension mismatch");
    RationalVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0 && v[c] != 0) out[r] += m(r, c) * v[c];
    return out;
}

void RowSpan::reduce(RationalVector& v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto p = pivots_[i];
        if (v[p] == 0) continue;
        const Rational factor = v[p];
        for (std::size_t k = 0; k < dim_; ++k)
            if (basis_[i][k] != 0) v[k] -= factor * basis_[i][k];
    }
}

bool RowSpan::contains(RationalVector v) const {
    if (v.size() != dim_) throw std::invalid_argument("RowSpan: dimension mismatch");
    reduce(v);
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool RowSpan::insert(RationalVector v) {
    if (v.size() != dim_) throw std::invalid_argument("RowSpan: dimension mismatch");
    reduce(v);
    std::size_t p = dim_;
    for (std::size_t k = 0; k < dim_; ++k)
        if (v[k] != 0) {
            p = k;
            break;
        }
    if (p == dim_) return false;
    const Rational inv = 1 / v[p];
    for (auto& x : v)
        if (x != 0) x *= inv;
    // keep earlier rows reduced at the new pivot so reduce() stays a single pass
    for (auto& b : basis_) {
        if (b[p] == 0) continue;
        const Rational factor = b[p];
        for (std::size_t k = 0; k < dim_; ++k)
            if (v[k] != 0) b[k] -= factor * v[k];
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

}  // namespace apolar
