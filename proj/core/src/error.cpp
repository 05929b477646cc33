#include "slocc/error.hpp"

namespace slocc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitian: return "NON_HERMITIAN";
    case ErrorCode::DimMismatch: return "DIM_MISMATCH";
    case ErrorCode::DegenerateInput: return "DEGENERATE_INPUT";
    case ErrorCode::NotBellDiagonal: return "NOT_BELL_DIAGONAL";
    case ErrorCode::OutOfTetrahedron: return "OUT_OF_TETRAHEDRON";
    case ErrorCode::UnsupportedPair: return "UNSUPPORTED_PAIR";
    case ErrorCode::InvalidState: return "INVALID_STATE";
    case ErrorCode::InternalInconsistency: return "INTERNAL_INCONSISTENCY";
    case ErrorCode::NoEncodingMatches: return "NO_ENCODING_MATCHES";
    case ErrorCode::Annihilated: return "ANNIHILATED";
    case ErrorCode::NotAVertex: return "NOT_A_VERTEX";
    case ErrorCode::BOutOfRange: return "B_OUT_OF_RANGE";
    case ErrorCode::NotOrdered: return "NOT_ORDERED";
    case ErrorCode::NotEntangled: return "NOT_ENTANGLED";
    case ErrorCode::NotConvertible: return "NOT_CONVERTIBLE";
    case ErrorCode::SeparableInput: return "SEPARABLE_INPUT";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace slocc
