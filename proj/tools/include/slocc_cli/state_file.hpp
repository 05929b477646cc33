#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "slocc/bell.hpp"
#include "slocc/matrix.hpp"
#include "slocc/symmetric_rep.hpp"

namespace slocc::cli {

/// Malformed or invariant-violating input; the message names the location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using StateValue = std::variant<ComplexMatrix, WeightVector, RMatrix>;

struct StateFile {
  StateValue value;
  std::string source;
};

/// {"kind":"density","matrix":[[[re,im],...]x4]}, {"kind":"weights","lambda":[...]}
/// or {"kind":"rmatrix","r":[[...]x4]}.
StateFile parse_state(const nlohmann::json& doc, const std::string& source);
StateFile parse_state_text(const std::string& text, const std::string& source);
/// "-" reads from `stdin_stream`.
StateFile read_state(const std::string& path, std::istream& stdin_stream);

nlohmann::json to_json(const WeightVector& w);
nlohmann::json to_json(const RMatrix& r);
nlohmann::json density_to_json(const ComplexMatrix& m);

/// The Bell weights of a weights file or of a Bell-diagonal density matrix.
/// Throws InputError otherwise.
WeightVector require_weights(const StateFile& state, double tol);
ComplexMatrix as_density(const StateFile& state);

}  // namespace slocc::cli
