#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace apolar {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals. Entries are kept canonical
/// (lowest terms, positive denominator).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Rational value);

    std::span<const Rational> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Rank over Q. Uses fraction-free integer elimination on row-cleared copies,
/// choosing the pivot of smallest bit length in each column.
std::size_t rank(const RationalMatrix& m);

/// Canonical basis of the right null space: the reduced row echelon form of
/// the kernel, pivots equal to 1, rows in increasing pivot position.
/// A 0 x c matrix yields the standard basis of Q^c.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// m * v
RationalVector apply(const RationalMatrix& m, std::span<const Rational> v);

/// Reduces `rows` in place to reduced row echelon form (zero rows removed)
/// and returns the pivot columns.
std::vector<std::size_t> reduce_to_rref(std::vector<RationalVector>& rows, std::size_t cols);

/// Incrementally grown subspace of Q^dim kept in echelon form.
class RowSpan {
public:
    explicit RowSpan(std::size_t dim) : dim_(dim) {}

    /// Adds v; returns true when v was not already in the span.
    bool insert(RationalVector v);
    bool contains(RationalVector v) const;

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return basis_.size(); }

private:
    void reduce(RationalVector& v) const;

    std::size_t dim_;
    std::vector<RationalVector> basis_;  // pivot entry 1
    std::vector<std::size_t> pivots_;
};

}  // namespace apolar
