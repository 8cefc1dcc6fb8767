#pragma once

#include <stdexcept>
#include <string>

namespace apolar {

/// A computation was refused because its size exceeds a configured limit.
class GuardViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Resource limits shared by the expensive operations.
struct Limits {
    std::size_t max_matrix_dim = 20000;  // rows and columns of any assembled matrix
    std::size_t max_locus_tau = 20;      // |T(n,d)| for support enumeration
    std::size_t max_class_monomials = 16; // subset search in equal-image classes
};

}  // namespace apolar
