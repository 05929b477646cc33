#include "slocc/real_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "slocc/error.hpp"

namespace slocc {

std::optional<std::vector<double>> solve_linear(RealRows a, std::vector<double> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::DimMismatch, "solve_linear: rhs length");
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorCode::DimMismatch, "solve_linear: matrix not square");
  }
  double scale = 0.0;
  for (const auto& row : a) {
    for (double x : row) scale = std::max(scale, std::abs(x));
  }
  const double singular = std::max(scale, 1.0) * 1e-14;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) <= singular) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

std::size_t matrix_rank(RealRows a, double tol) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) <= tol) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const double f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::size_t affine_dimension(std::span<const std::vector<double>> points, double tol) {
  if (points.size() < 2) return 0;
  RealRows diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t k = 1; k < points.size(); ++k) {
    std::vector<double> d(points[k].size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = points[k][i] - points[0][i];
    diffs.push_back(std::move(d));
  }
  return matrix_rank(std::move(diffs), tol);
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimMismatch, "dot: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace slocc
