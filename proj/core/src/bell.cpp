#include "slocc/bell.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "slocc/eigensystem.hpp"
#include "slocc/error.hpp"
#include "slocc/tensor.hpp"

namespace slocc {

Perm4 inverse(const Perm4& p) {
  Perm4 inv{};
  for (std::size_t k = 0; k < 4; ++k) inv[p[k]] = k;
  return inv;
}

Perm4 compose(const Perm4& a, const Perm4& b) {
  Perm4 out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = a[b[k]];
  return out;
}

bool is_permutation(const Perm4& p) {
  std::array<bool, 4> seen{};
  for (std::size_t x : p) {
    if (x >= 4 || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

const std::array<std::vector<Complex>, 4>& bell_vectors() {
  static const std::array<std::vector<Complex>, 4> vectors = [] {
    const double h = 1.0 / std::sqrt(2.0);
    return std::array<std::vector<Complex>, 4>{
        std::vector<Complex>{h, 0.0, 0.0, h},
        std::vector<Complex>{h, 0.0, 0.0, -h},
        std::vector<Complex>{0.0, h, h, 0.0},
        std::vector<Complex>{0.0, h, -h, 0.0},
    };
  }();
  return vectors;
}

const std::array<ComplexMatrix, 4>& bell_projectors() {
  static const std::array<ComplexMatrix, 4> projectors = [] {
    std::array<ComplexMatrix, 4> p;
    for (std::size_t k = 0; k < 4; ++k) {
      // From the unnormalized +-1 vectors so every entry is exactly 0 or +-1/2.
      std::vector<Complex> v(4);
      for (std::size_t i = 0; i < 4; ++i) {
        v[i] = bell_vectors()[k][i].real() > 0.0 ? 1.0 : (bell_vectors()[k][i].real() < 0.0 ? -1.0 : 0.0);
      }
      p[k] = Complex(0.5) * ComplexMatrix::outer(v, v);
    }
    return p;
  }();
  return projectors;
}

WeightVector WeightVector::from(const std::array<double, 4>& w, const Tolerances& tol) {
  double total = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!std::isfinite(w[i]) || w[i] < tol.weight_nonneg) {
      std::ostringstream msg;
      msg << "weight " << i + 1 << " = " << w[i] << " is negative or non-finite";
      throw Error(ErrorCode::InvalidState, msg.str());
    }
    total += w[i];
  }
  if (std::abs(total - 1.0) > tol.equality) {
    std::ostringstream msg;
    msg << "weights sum to " << total << ", expected 1";
    throw Error(ErrorCode::InvalidState, msg.str());
  }
  return WeightVector(w);
}

double WeightVector::max() const { return *std::max_element(w_.begin(), w_.end()); }

bool WeightVector::is_ordered(double tol) const {
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    if (w_[i] < w_[i + 1] - tol) return false;
  }
  return true;
}

ComplexMatrix weights_to_density(const WeightVector& lambda) {
  ComplexMatrix rho(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    ComplexMatrix term = bell_projectors()[k];
    term *= lambda[k];
    rho += term;
  }
  return rho;
}

ComplexMatrix to_bell_basis(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw Error(ErrorCode::DimMismatch, "two-qubit operator must be 4x4");
  }
  ComplexMatrix out(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto rv = rho * std::span<const Complex>(bell_vectors()[i]);
    for (std::size_t j = 0; j < 4; ++j) out(j, i) = inner(bell_vectors()[j], rv);
  }
  return out;
}

WeightVector density_to_weights(const ComplexMatrix& rho, const Tolerances& tol) {
  const ComplexMatrix b = to_bell_basis(rho);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i != j && std::abs(b(i, j)) >= tol.equality) {
        std::ostringstream msg;
        msg << "Bell-basis element (" << i + 1 << "," << j + 1 << ") = " << std::abs(b(i, j));
        throw Error(ErrorCode::NotBellDiagonal, msg.str());
      }
    }
  }
  return WeightVector::from({std::real(b(0, 0)), std::real(b(1, 1)), std::real(b(2, 2)),
                             std::real(b(3, 3))},
                            tol);
}

const std::array<CorrelationCoords, 4>& bell_coordinates() {
  static const std::array<CorrelationCoords, 4> coords{{
      {-1.0, 1.0, -1.0},
      {1.0, -1.0, -1.0},
      {-1.0, -1.0, 1.0},
      {1.0, 1.0, 1.0},
  }};
  return coords;
}

CorrelationCoords weights_to_coords(const WeightVector& lambda) {
  CorrelationCoords c;
  for (std::size_t k = 0; k < 4; ++k) {
    c.x += lambda[k] * bell_coordinates()[k].x;
    c.y += lambda[k] * bell_coordinates()[k].y;
    c.z += lambda[k] * bell_coordinates()[k].z;
  }
  return c;
}

// The rows (1, c_k) are mutually orthogonal with squared norm 4.
WeightVector coords_to_weights(const CorrelationCoords& c, const Tolerances& tol) {
  std::array<double, 4> w{};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& b = bell_coordinates()[k];
    w[k] = (1.0 + b.x * c.x + b.y * c.y + b.z * c.z) / 4.0;
    if (w[k] < -1e-9) {
      std::ostringstream msg;
      msg << "point (" << c.x << ", " << c.y << ", " << c.z << ") lies outside the tetrahedron";
      throw Error(ErrorCode::OutOfTetrahedron, msg.str());
    }
  }
  Tolerances relaxed = tol;
  relaxed.weight_nonneg = std::min(tol.weight_nonneg, -1e-9);
  return WeightVector::from(w, relaxed);
}

CorrelationCoords correlation_coords(const ComplexMatrix& rho) {
  auto expect = [&](int k) { return std::real(trace_of_product(kron(pauli(k), pauli(k)), rho)); };
  return {-expect(1), -expect(2), -expect(3)};
}

OrderedWeights canonical_order(const WeightVector& lambda) {
  Perm4 perm = kIdentityPerm;
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return lambda[a] > lambda[b]; });
  std::array<double, 4> sorted{};
  for (std::size_t k = 0; k < 4; ++k) sorted[k] = lambda[perm[k]];
  return {WeightVector(sorted), perm};
}

bool is_entangled_bd(const WeightVector& lambda) { return lambda.max() > 0.5 + 1e-12; }

double partial_transpose_min_eigenvalue(const ComplexMatrix& rho) {
  const std::array<std::size_t, 2> dims{2, 2};
  return min_eigenvalue(partial_transpose(rho, dims, 1), 1e-9);
}

}  // namespace slocc
