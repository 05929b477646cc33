#include <cmath>
#include <limits>

#include "slocc/eigensystem.hpp"
#include "slocc/error.hpp"
#include "slocc/random.hpp"
#include "slocc/separability.hpp"

namespace slocc {
namespace {

// Z contracted with a fixed vector on one side: the effective operator on the
// other factor.
ComplexMatrix contract_b(const ComplexMatrix& z, std::span<const Complex> beta, std::size_t da,
                         std::size_t db) {
  ComplexMatrix out(da, da);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t k = 0; k < da; ++k) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < db; ++j) {
        for (std::size_t l = 0; l < db; ++l) {
          acc += std::conj(beta[j]) * z(i * db + j, k * db + l) * beta[l];
        }
      }
      out(i, k) = acc;
    }
  }
  return out;
}

ComplexMatrix contract_a(const ComplexMatrix& z, std::span<const Complex> alpha, std::size_t da,
                         std::size_t db) {
  ComplexMatrix out(db, db);
  for (std::size_t j = 0; j < db; ++j) {
    for (std::size_t l = 0; l < db; ++l) {
      Complex acc = 0.0;
      for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t k = 0; k < da; ++k) {
          acc += std::conj(alpha[i]) * z(i * db + j, k * db + l) * alpha[k];
        }
      }
      out(j, l) = acc;
    }
  }
  return out;
}

std::pair<double, std::vector<Complex>> lowest(const ComplexMatrix& m) {
  const EigenSystem es = hermitian_eigensystem(m, 1e-9);
  return {es.values.front(), es.vectors.column(0)};
}

}  // namespace

SeesawResult seesaw_min_product(const ComplexMatrix& z, const SeesawOptions& options) {
  const std::size_t da = options.dim_a;
  const std::size_t db = options.dim_b;
  if (z.rows() != da * db || z.cols() != da * db) {
    throw Error(ErrorCode::DimMismatch, "witness operator does not match the factor dimensions");
  }
  if (!z.is_hermitian(1e-9)) throw Error(ErrorCode::NonHermitian, "witness operator");

  Rng rng(options.seed);
  SeesawResult best{std::numeric_limits<double>::infinity(), {}, {}};
  for (std::size_t restart = 0; restart < options.restarts; ++restart) {
    std::vector<Complex> alpha = rng.unit_vector(da);
    std::vector<Complex> beta = rng.unit_vector(db);
    double value = std::numeric_limits<double>::infinity();
    for (std::size_t sweep = 0; sweep < options.max_sweeps; ++sweep) {
      auto [va, a] = lowest(contract_b(z, beta, da, db));
      alpha = std::move(a);
      auto [vb, b] = lowest(contract_a(z, alpha, da, db));
      beta = std::move(b);
      const bool done = std::abs(value - vb) < options.convergence;
      value = vb;
      if (done) break;
    }
    if (value < best.minimum) best = {value, alpha, beta};
  }
  return best;
}

}  // namespace slocc
