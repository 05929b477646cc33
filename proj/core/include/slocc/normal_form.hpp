#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "slocc/bell.hpp"
#include "slocc/convertibility.hpp"
#include "slocc/matrix.hpp"

namespace slocc {

struct FilterOptions {
  /// Exponent multiplier: each half-step applies (2 rho_side)^(-omega/2).
  double omega = 1.5;
  std::size_t max_iterations = 500;
  /// Both marginals within this of I/2 (max-abs entry).
  double tolerance = 1e-10;
  /// Abort when a marginal's smallest eigenvalue drops below this.
  double blowup = 1e-9;
};

struct FilterResult {
  ComplexMatrix state;
  bool converged;
  std::size_t iterations;
  double marginal_deviation;
};

/// Alternating local filtering towards maximally mixed marginals. Throws
/// InvalidState.
FilterResult filter_iteration(const ComplexMatrix& rho, const FilterOptions& options = {});

enum class StateClass { Separable, BellDiagonal, NDClass };

struct NormalFormResult {
  StateClass state_class;
  /// BellDiagonal: ordered entangled weights. NDClass: weights of the
  /// quasi-distilled counterpart ((1+2b)/2, (1-2b)/2, 0, 0).
  std::optional<WeightVector> lambda;
  /// NDClass only.
  double b = 0.0;
  std::size_t iterations = 0;
  double marginal_deviation = 0.0;
};

/// Throws InvalidState unless rho is a 4x4 density matrix (tolerance 1e-9).
void require_density(const ComplexMatrix& rho);

/// Separable iff the partial transpose has no eigenvalue below -1e-10.
bool is_ppt(const ComplexMatrix& rho);

NormalFormResult classify(const ComplexMatrix& rho, const FilterOptions& options = {});

/// Ordered Bell-diagonal weights SLOCC-equivalent to rho. Throws SeparableInput.
WeightVector bd_equivalent(const ComplexMatrix& rho, const FilterOptions& options = {});

/// Decision for arbitrary two-qubit states. A map is attached only when the
/// decision goes through the Bell-diagonal route.
ConversionDecision can_convert_two_qubit(const ComplexMatrix& rho, const ComplexMatrix& target);

/// Square roots of the eigenvalues of rho rho~, descending,
/// with rho~ = (Y (x) Y) rho* (Y (x) Y).
std::array<double, 4> spin_flip_singular_values(const ComplexMatrix& rho);

double concurrence(const ComplexMatrix& rho);

/// b = (mu_1 - mu_2) / (2 (mu_1 + mu_2)) from spin_flip_singular_values. The
/// ratio is unchanged by invertible product filters, and equals b on rho_nd(b).
double nd_parameter(const ComplexMatrix& rho);

/// T_ij = tr[rho (sigma_i (x) sigma_j)], i, j in {x, y, z}.
std::array<std::array<double, 3>, 3> correlation_matrix(const ComplexMatrix& rho);

}  // namespace slocc
