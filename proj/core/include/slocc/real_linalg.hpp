#pragma once

#include <optional>
#include <span>
#include <vector>

namespace slocc {

/// Row-major dense real matrix stored as a vector of rows.
using RealRows = std::vector<std::vector<double>>;

/// Solve A x = b by Gaussian elimination with partial pivoting; nullopt when A
/// is numerically singular.
std::optional<std::vector<double>> solve_linear(RealRows a, std::vector<double> b);

/// Numerical rank by row reduction with pivot threshold `tol`.
std::size_t matrix_rank(RealRows a, double tol = 1e-9);

/// Dimension of the affine hull of a point set.
std::size_t affine_dimension(std::span<const std::vector<double>> points, double tol = 1e-9);

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace slocc
