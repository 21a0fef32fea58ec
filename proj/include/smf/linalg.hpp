#pragma once

#include "smf/io.hpp"

namespace smf {

// Thin SVD truncated to the leading k triplets. u has orthonormal columns,
// vt orthonormal rows, singular_values nonincreasing.
struct Svd {
  Matrix u;                // m x k
  Vector singular_values;  // k, nonincreasing, >= 0
  Matrix vt;               // k x n
};

double frobenius_norm(const Matrix& m);

// Largest singular value.
double operator_norm(const Matrix& m);

// Top-k singular triplets. Exact thin SVD when min(rows, cols) <= 512,
// randomized subspace iteration (2 power iterations, oversampling 8,
// seeded) above that size.
Svd truncated_svd(const Matrix& m, Eigen::Index k);

// Best rank-r approximation in Frobenius norm; identity when r >= min(rows, cols).
// When sigma_r == sigma_{r+1} the minimizer is not unique; the first r triplets
// in the order produced by the SVD routine are kept.
Matrix rank_projection(const Matrix& m, Eigen::Index r);

// Minimizes ||a*x - b||_F via SVD (not the normal equations).
// Throws NumericalError when a is rank deficient (sigma_min < 1e-10 * sigma_max).
Matrix least_squares(const Matrix& a, const Matrix& b);

// Orthogonal projection onto { m : col(m) in col(u_basis), row(m) in col(v_basis) }.
Matrix subspace_projection(const Matrix& m, const Matrix& u_basis, const Matrix& v_basis);

// Orthonormal basis for the column space of m (QR-based).
Matrix orthonormal_basis(const Matrix& m);

}  // namespace smf
