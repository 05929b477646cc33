#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "slocc/matrix.hpp"

namespace slocc {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b);

/// Trace out every factor not listed in `kept` (kept indices in ascending
/// order). Factors are big-endian: factor 0 is the most significant digit.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> kept);

/// Transpose the indices of factor `subsystem` only.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                std::size_t subsystem);

/// Reorder tensor factors: factor k of the result is factor order[k] of the
/// input.
ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                 std::span<const std::size_t> order);

}  // namespace slocc
