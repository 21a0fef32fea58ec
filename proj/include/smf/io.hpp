#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace smf {

using Matrix = Eigen::MatrixXd;  // dense, column-major
using Vector = Eigen::VectorXd;

// Error taxonomy mirrored by the CLI exit codes (2/3/4).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// CSV matrix format: rows of comma-separated decimal literals, no header.
// Rejects ragged rows and non-finite entries.
Matrix read_csv_matrix(const std::string& path);
void write_csv_matrix(const std::string& path, const Matrix& m);

// Labels are a single column (or row) of small nonnegative integers.
std::vector<int> read_csv_labels(const std::string& path);
void write_csv_labels(const std::string& path, const std::vector<int>& y);

void require_finite(const Matrix& m, const std::string& what);

}  // namespace smf
