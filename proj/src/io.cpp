#include "smf/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace smf {

void require_finite(const Matrix& m, const std::string& what) {
  if (!m.allFinite()) {
    throw NumericalError(what + ": non-finite entries");
  }
}

static std::vector<double> parse_csv_row(const std::string& line, const std::string& path,
                                         std::size_t lineno) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    std::string cell = line.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    // trim spaces
    std::size_t b = cell.find_first_not_of(" \t\r");
    std::size_t e = cell.find_last_not_of(" \t\r");
    if (b == std::string::npos) {
      throw IoError(path + ":" + std::to_string(lineno) + ": empty cell");
    }
    cell = cell.substr(b, e - b + 1);
    try {
      std::size_t used = 0;
      double v = std::stod(cell, &used);
      if (used != cell.size()) throw std::invalid_argument(cell);
      if (!std::isfinite(v)) {
        throw NumericalError(path + ":" + std::to_string(lineno) + ": non-finite value");
      }
      out.push_back(v);
    } catch (const NumericalError&) {
      throw;
    } catch (const std::exception&) {
      throw IoError(path + ":" + std::to_string(lineno) + ": bad numeric literal '" + cell +
                    "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Matrix read_csv_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    rows.push_back(parse_csv_row(line, path, lineno));
    if (rows.size() > 1 && rows.back().size() != rows.front().size()) {
      throw IoError(path + ":" + std::to_string(lineno) + ": ragged row (" +
                    std::to_string(rows.back().size()) + " vs " +
                    std::to_string(rows.front().size()) + " columns)");
    }
  }
  if (rows.empty()) throw IoError(path + ": empty matrix");
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

void write_csv_matrix(const std::string& path, const Matrix& m) {
  require_finite(m, "write_csv_matrix(" + path + ")");
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  char buf[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << buf;
      if (j + 1 < m.cols()) out << ',';
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed for " + path);
}

std::vector<int> read_csv_labels(const std::string& path) {
  Matrix m = read_csv_matrix(path);
  if (m.rows() != 1 && m.cols() != 1) {
    throw IoError(path + ": labels must be a single row or column");
  }
  const Eigen::Index len = m.size();
  std::vector<int> y(static_cast<std::size_t>(len));
  for (Eigen::Index i = 0; i < len; ++i) {
    double v = m(i);
    int iv = static_cast<int>(std::lround(v));
    if (std::abs(v - iv) > 1e-9 || iv < 0) {
      throw IoError(path + ": label " + std::to_string(v) + " is not a nonnegative integer");
    }
    y[static_cast<std::size_t>(i)] = iv;
  }
  return y;
}

void write_csv_labels(const std::string& path, const std::vector<int>& y) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  for (int v : y) out << v << '\n';
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace smf
