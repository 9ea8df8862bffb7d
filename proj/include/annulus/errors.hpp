#pragma once

#include <stdexcept>
#include <string>

namespace annulus {

/// Invalid parameters: bad radii, unsupported dimension, out-of-range mode index.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A point or radius lies outside the region where a function is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A per-mode linear system could not be solved to the required residual.
/// Valid partitions never produce this; it points at a basis-conditioning bug.
class SingularSystemError : public std::runtime_error {
public:
    SingularSystemError(const std::string& what, int k, int ell)
        : std::runtime_error(what), k_(k), ell_(ell) {}
    int degree() const noexcept { return k_; }
    int basis_index() const noexcept { return ell_; }

private:
    int k_;
    int ell_;
};

}  // namespace annulus
