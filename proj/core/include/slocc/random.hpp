#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "slocc/matrix.hpp"

namespace slocc {

/// Seeded generator with platform-independent real conversions, so that
/// every seeded computation is reproducible bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller).
  double normal();
  std::size_t index(std::size_t n);

  std::vector<Complex> complex_gaussian(std::size_t n);
  std::vector<Complex> unit_vector(std::size_t n);
  /// Ginibre matrix with i.i.d. complex Gaussian entries.
  ComplexMatrix ginibre(std::size_t rows, std::size_t cols);
  /// G G^dagger / tr for a d x rank Ginibre G.
  ComplexMatrix density_matrix(std::size_t dim, std::size_t rank);
  /// Uniform on the probability simplex.
  std::array<double, 4> simplex4();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace slocc
