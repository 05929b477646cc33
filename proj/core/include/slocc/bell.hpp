#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "slocc/matrix.hpp"
#include "slocc/tolerances.hpp"

namespace slocc {

/// Permutation of the four Bell labels (0-based: index 0 is Phi_1).
using Perm4 = std::array<std::size_t, 4>;
inline constexpr Perm4 kIdentityPerm{0, 1, 2, 3};

Perm4 inverse(const Perm4& p);
/// (a o b)[k] = a[b[k]]
Perm4 compose(const Perm4& a, const Perm4& b);
bool is_permutation(const Perm4& p);

/// Phi_1,2 = (|00> +- |11>)/sqrt2, Phi_3,4 = (|01> +- |10>)/sqrt2, stored at
/// indices 0..3. Every module takes its Bell labels from here.
const std::array<std::vector<Complex>, 4>& bell_vectors();
const std::array<ComplexMatrix, 4>& bell_projectors();

struct OrderedWeights;
class WeightVector;
OrderedWeights canonical_order(const WeightVector& lambda);

/// Probability weights on the four Bell projectors.
class WeightVector {
 public:
  /// Throws InvalidState unless entries are >= tol.weight_nonneg and sum to 1
  /// within tol.equality.
  static WeightVector from(const std::array<double, 4>& w, const Tolerances& tol = {});

  double operator[](std::size_t i) const { return w_[i]; }
  const std::array<double, 4>& values() const noexcept { return w_; }
  double max() const;
  bool is_ordered(double tol = 1e-12) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  friend OrderedWeights canonical_order(const WeightVector& lambda);
  explicit WeightVector(const std::array<double, 4>& w) : w_(w) {}
  std::array<double, 4> w_;
};

ComplexMatrix weights_to_density(const WeightVector& lambda);

/// Reads Bell weights off a Bell-diagonal density matrix; NotBellDiagonal if
/// any off-diagonal Bell-basis element exceeds tol.equality.
WeightVector density_to_weights(const ComplexMatrix& rho, const Tolerances& tol = {});

/// <Phi_i| rho |Phi_j>
ComplexMatrix to_bell_basis(const ComplexMatrix& rho);

/// (-<XX>, -<YY>, -<ZZ>)
struct CorrelationCoords {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

const std::array<CorrelationCoords, 4>& bell_coordinates();
CorrelationCoords weights_to_coords(const WeightVector& lambda);
/// Inverse map; OutOfTetrahedron if a recovered weight is below -1e-9.
WeightVector coords_to_weights(const CorrelationCoords& c, const Tolerances& tol = {});
CorrelationCoords correlation_coords(const ComplexMatrix& rho);

struct OrderedWeights {
  WeightVector weights;
  /// weights[k] == input[perm[k]]
  Perm4 perm;
};

/// Stable descending sort (ties keep the lowest original index first).
OrderedWeights canonical_order(const WeightVector& lambda);

/// Separable Bell-diagonal states form the closed octahedron max(lambda) <= 1/2.
bool is_entangled_bd(const WeightVector& lambda);

/// Smallest eigenvalue of the partial transpose on the second qubit.
double partial_transpose_min_eigenvalue(const ComplexMatrix& rho);

}  // namespace slocc
