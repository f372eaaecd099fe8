#ifndef PROLATE_TRIDIAGONAL_HPP
#define PROLATE_TRIDIAGONAL_HPP

#include <span>
#include <vector>

namespace prolate {

// Symmetric tridiagonal eigensolver. diag has n entries, offdiag n-1 entries
// with offdiag[i] coupling rows i and i+1.

/// All eigenvalues in ascending order, implicit-shift QL.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> offdiag);

/// Unit-norm eigenvector for the (computed) eigenvalue `lambda` by inverse
/// iteration with a partially pivoted tridiagonal LU.
std::vector<double> tridiagonal_eigenvector(std::span<const double> diag,
                                            std::span<const double> offdiag,
                                            double lambda);

/// v^T T v / v^T v.
double tridiagonal_rayleigh(std::span<const double> diag, std::span<const double> offdiag,
                            std::span<const double> v);

/// |T v - lambda v|_inf / |v|_inf.
double tridiagonal_residual(std::span<const double> diag, std::span<const double> offdiag,
                            std::span<const double> v, double lambda);

} // namespace prolate

#endif
