#include "smf/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <random>

namespace smf {

namespace {

constexpr Eigen::Index kExactSvdLimit = 512;
constexpr int kPowerIterations = 2;
constexpr Eigen::Index kOversampling = 8;
constexpr unsigned kRandSvdSeed = 0x5eed5afe;

Svd take_top_k(const Eigen::BDCSVD<Matrix>& svd, Eigen::Index k) {
  Svd out;
  out.u = svd.matrixU().leftCols(k);
  out.singular_values = svd.singularValues().head(k);
  out.vt = svd.matrixV().leftCols(k).transpose();
  return out;
}

// Randomized range finder with power iterations; exact on the sketched
// subspace, deterministic through the fixed seed.
Svd randomized_svd(const Matrix& m, Eigen::Index k) {
  const Eigen::Index sketch = std::min(m.cols(), k + kOversampling);
  std::mt19937_64 rng(kRandSvdSeed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix omega(m.cols(), sketch);
  for (Eigen::Index j = 0; j < omega.cols(); ++j)
    for (Eigen::Index i = 0; i < omega.rows(); ++i) omega(i, j) = gauss(rng);

  Matrix y = m * omega;
  Eigen::HouseholderQR<Matrix> qr(y);
  Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), sketch);
  for (int it = 0; it < kPowerIterations; ++it) {
    Matrix z = m.transpose() * q;
    Eigen::HouseholderQR<Matrix> qrz(z);
    Matrix qz = qrz.householderQ() * Matrix::Identity(m.cols(), sketch);
    y = m * qz;
    Eigen::HouseholderQR<Matrix> qry(y);
    q = qry.householderQ() * Matrix::Identity(m.rows(), sketch);
  }
  Matrix b = q.transpose() * m;  // sketch x n
  Eigen::BDCSVD<Matrix> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Svd out = take_top_k(svd, k);
  out.u = q * out.u;
  return out;
}

}  // namespace

double frobenius_norm(const Matrix& m) { return m.norm(); }

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return truncated_svd(m, 1).singular_values(0);
}

Svd truncated_svd(const Matrix& m, Eigen::Index k) {
  if (k < 1 || k > std::min(m.rows(), m.cols())) {
    throw ConfigError("truncated_svd: k=" + std::to_string(k) + " out of range for " +
                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  require_finite(m, "truncated_svd");
  if (std::min(m.rows(), m.cols()) <= kExactSvdLimit) {
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return take_top_k(svd, k);
  }
  return randomized_svd(m, k);
}

Matrix rank_projection(const Matrix& m, Eigen::Index r) {
  if (r < 1) throw ConfigError("rank_projection: r must be >= 1");
  if (r >= std::min(m.rows(), m.cols())) return m;
  Svd svd = truncated_svd(m, r);
  return svd.u * svd.singular_values.asDiagonal() * svd.vt;
}

Matrix least_squares(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw ConfigError("least_squares: row mismatch " + std::to_string(a.rows()) + " vs " +
                      std::to_string(b.rows()));
  }
  Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) < 1e-10 * sv(0)) {
    throw NumericalError("least_squares: rank-deficient system (sigma_min/sigma_max = " +
                         std::to_string(sv.size() ? sv(sv.size() - 1) / sv(0) : 0.0) + ")");
  }
  return svd.solve(b);
}

Matrix subspace_projection(const Matrix& m, const Matrix& u_basis, const Matrix& v_basis) {
  return u_basis * (u_basis.transpose() * m * v_basis) * v_basis.transpose();
}

Matrix orthonormal_basis(const Matrix& m) {
  Eigen::ColPivHouseholderQR<Matrix> qr(m);
  const Eigen::Index rank = qr.rank();
  Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), std::min(m.rows(), m.cols()));
  return q.leftCols(rank);
}

}  // namespace smf
