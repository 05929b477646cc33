#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slocc {

enum class ErrorCode {
  NonHermitian,
  DimMismatch,
  DegenerateInput,
  NotBellDiagonal,
  OutOfTetrahedron,
  UnsupportedPair,
  InvalidState,
  InternalInconsistency,
  NoEncodingMatches,
  Annihilated,
  NotAVertex,
  BOutOfRange,
  NotOrdered,
  NotEntangled,
  NotConvertible,
  SeparableInput,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code. All library failures are
/// reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace slocc
