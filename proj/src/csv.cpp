#include "dpcp/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dpcp {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw std::runtime_error("csv: malformed number '" + s + "'");
  return v;
}

long parse_int(const std::string& s) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0')
    throw std::runtime_error("csv: malformed integer '" + s + "'");
  return v;
}

std::string require_line(std::istream& is, const char* what) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error(std::string("csv: missing ") + what);
  return line;
}

void write_matrix_rows(std::ostream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << format_double(m(i, j));
    }
    os << '\n';
  }
}

Matrix read_matrix_rows(std::istream& is, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto cells = split_csv(require_line(is, "matrix row"));
    if (cells.size() != cols) throw std::runtime_error("csv: wrong column count in matrix row");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_double(cells[j]);
  }
  return m;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_point_cloud(std::ostream& os, const PointCloud& cloud) {
  os << cloud.dim() << ',' << cloud.size() << '\n';
  write_matrix_rows(os, cloud.points);
  if (cloud.has_labels()) {
    os << "labels";
    for (int l : cloud.labels) os << ',' << l;
    os << '\n';
  }
}

PointCloud read_point_cloud(std::istream& is) {
  const auto header = split_csv(require_line(is, "point-cloud header"));
  if (header.size() != 2) throw std::runtime_error("csv: point-cloud header must be 'D,N'");
  const std::size_t D = static_cast<std::size_t>(parse_int(header[0]));
  const std::size_t N = static_cast<std::size_t>(parse_int(header[1]));
  PointCloud cloud;
  cloud.points = read_matrix_rows(is, D, N);
  std::string line;
  if (std::getline(is, line) && !line.empty() && line.rfind("labels", 0) == 0) {
    const auto cells = split_csv(line);
    if (cells.size() != N + 1) throw std::runtime_error("csv: label count mismatch");
    cloud.labels.resize(N);
    for (std::size_t j = 0; j < N; ++j) cloud.labels[j] = static_cast<int>(parse_int(cells[j + 1]));
  }
  return cloud;
}

void write_arrangement(std::ostream& os, const Arrangement& arr) {
  const std::size_t D = arr.dim();
  const std::size_t n = arr.count();
  os << D << ',' << n << '\n';
  Matrix m(D, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < D; ++i) m(i, j) = arr.normal(j)[i];
  write_matrix_rows(os, m);
  os << "weights";
  for (std::size_t j = 0; j < n; ++j) os << ',' << arr.weight(j);
  os << '\n';
}

Arrangement read_arrangement(std::istream& is) {
  const auto header = split_csv(require_line(is, "arrangement header"));
  if (header.size() != 2) throw std::runtime_error("csv: arrangement header must be 'D,n'");
  const std::size_t D = static_cast<std::size_t>(parse_int(header[0]));
  const std::size_t n = static_cast<std::size_t>(parse_int(header[1]));
  const Matrix m = read_matrix_rows(is, D, n);
  const auto cells = split_csv(require_line(is, "weights line"));
  if (cells.size() != n + 1 || cells[0] != "weights")
    throw std::runtime_error("csv: malformed weights line");
  std::vector<UnitVector> normals;
  for (std::size_t j = 0; j < n; ++j)
    normals.emplace_back(Vec(m.col(j).begin(), m.col(j).end()));
  std::vector<int> weights(n);
  for (std::size_t j = 0; j < n; ++j) weights[j] = static_cast<int>(parse_int(cells[j + 1]));
  return Arrangement(std::move(normals), std::move(weights));
}

void write_cluster_result(std::ostream& os, const ClusterResult& result) {
  os << "labels";
  for (int l : result.labels) os << ',' << l;
  os << '\n';
  const std::size_t D = result.normals.empty() ? 0 : result.normals.front().dim();
  Matrix m(D, result.normals.size());
  for (std::size_t j = 0; j < result.normals.size(); ++j)
    for (std::size_t i = 0; i < D; ++i) m(i, j) = result.normals[j][i];
  write_matrix_rows(os, m);
  os << "residuals";
  for (double r : result.residuals) os << ',' << format_double(r);
  os << '\n';
}

ClusterResult read_cluster_result(std::istream& is) {
  ClusterResult result;
  const auto label_cells = split_csv(require_line(is, "labels line"));
  if (label_cells.empty() || label_cells[0] != "labels")
    throw std::runtime_error("csv: malformed labels line");
  for (std::size_t j = 1; j < label_cells.size(); ++j)
    result.labels.push_back(static_cast<int>(parse_int(label_cells[j])));

  std::vector<std::string> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("residuals", 0) == 0) {
      const auto cells = split_csv(line);
      for (std::size_t j = 1; j < cells.size(); ++j)
        result.residuals.push_back(parse_double(cells[j]));
      break;
    }
    if (!line.empty()) rows.push_back(line);
  }
  if (!rows.empty()) {
    const std::size_t D = rows.size();
    const std::size_t n = split_csv(rows[0]).size();
    Matrix m(D, n);
    for (std::size_t i = 0; i < D; ++i) {
      const auto cells = split_csv(rows[i]);
      if (cells.size() != n) throw std::runtime_error("csv: ragged normals block");
      for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_double(cells[j]);
    }
    for (std::size_t j = 0; j < n; ++j)
      result.normals.emplace_back(Vec(m.col(j).begin(), m.col(j).end()));
  }
  for (double r : result.residuals) result.final_objective += r;
  return result;
}

namespace {

template <typename Writer>
void write_file(const std::string& path, Writer&& writer) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  writer(os);
}

template <typename Reader>
auto read_file(const std::string& path, Reader&& reader) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return reader(is);
}

}  // namespace

void write_point_cloud_file(const std::string& path, const PointCloud& cloud) {
  write_file(path, [&](std::ostream& os) { write_point_cloud(os, cloud); });
}

PointCloud read_point_cloud_file(const std::string& path) {
  return read_file(path, [](std::istream& is) { return read_point_cloud(is); });
}

void write_arrangement_file(const std::string& path, const Arrangement& arr) {
  write_file(path, [&](std::ostream& os) { write_arrangement(os, arr); });
}

Arrangement read_arrangement_file(const std::string& path) {
  return read_file(path, [](std::istream& is) { return read_arrangement(is); });
}

ClusterResult read_cluster_result_file(const std::string& path) {
  return read_file(path, [](std::istream& is) { return read_cluster_result(is); });
}

}  // namespace dpcp
