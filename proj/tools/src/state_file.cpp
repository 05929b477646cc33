#include "slocc_cli/state_file.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "slocc/error.hpp"
#include "slocc/normal_form.hpp"

namespace slocc::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw InputError(source + ": " + where + ": " + what);
}

double finite_number(const json& j, const std::string& source, const std::string& where) {
  if (!j.is_number()) fail(source, where, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(source, where, "non-finite value");
  return x;
}

const json& array_of(const json& j, std::size_t n, const std::string& source, const std::string& where) {
  if (!j.is_array() || j.size() != n) fail(source, where, "expected an array of length " + std::to_string(n));
  return j;
}

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

}  // namespace

StateFile parse_state(const json& doc, const std::string& source) {
  if (!doc.is_object()) fail(source, "$", "expected a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) fail(source, "kind", "missing string field");
  const std::string kind = doc["kind"].get<std::string>();

  if (kind == "weights") {
    if (!doc.contains("lambda")) fail(source, "lambda", "missing field");
    const json& l = array_of(doc["lambda"], 4, source, "lambda");
    std::array<double, 4> w{};
    for (std::size_t i = 0; i < 4; ++i) w[i] = finite_number(l[i], source, at("lambda", i));
    try {
      return {WeightVector::from(w), source};
    } catch (const Error& e) {
      fail(source, "lambda", e.what());
    }
  }
  if (kind == "rmatrix") {
    if (!doc.contains("r")) fail(source, "r", "missing field");
    const json& rows = array_of(doc["r"], 4, source, "r");
    RMatrix r;
    for (std::size_t i = 0; i < 4; ++i) {
      const json& row = array_of(rows[i], 4, source, at("r", i));
      for (std::size_t j = 0; j < 4; ++j) r(i, j) = finite_number(row[j], source, at(at("r", i), j));
    }
    if (r.min() < 0.0) fail(source, "r", "entries must be nonnegative");
    return {r, source};
  }
  if (kind == "density") {
    if (!doc.contains("matrix")) fail(source, "matrix", "missing field");
    const json& rows = array_of(doc["matrix"], 4, source, "matrix");
    ComplexMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      const json& row = array_of(rows[i], 4, source, at("matrix", i));
      for (std::size_t j = 0; j < 4; ++j) {
        const std::string where = at(at("matrix", i), j);
        const json& pair = row[j];
        if (!pair.is_array() || pair.size() != 2) fail(source, where, "expected [re, im]");
        m(i, j) = Complex(finite_number(pair[0], source, where + "[0]"), finite_number(pair[1], source, where + "[1]"));
      }
    }
    try {
      require_density(m);
    } catch (const Error& e) {
      fail(source, "matrix", e.what());
    }
    return {m, source};
  }
  fail(source, "kind", "unknown kind '" + kind + "' (expected density, weights or rmatrix)");
}

StateFile parse_state_text(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
  return parse_state(doc, source);
}

StateFile read_state(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << stdin_stream.rdbuf();
    return parse_state_text(buffer.str(), "<stdin>");
  }
  std::ifstream file(path);
  if (!file) throw InputError(path + ": cannot open file");
  buffer << file.rdbuf();
  return parse_state_text(buffer.str(), path);
}

nlohmann::json to_json(const WeightVector& w) { return w.values(); }

nlohmann::json to_json(const RMatrix& r) {
  json rows = json::array();
  for (const auto& row : r.entries()) rows.push_back(row);
  return rows;
}

nlohmann::json density_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

WeightVector require_weights(const StateFile& state, double tol) {
  if (const auto* w = std::get_if<WeightVector>(&state.value)) return *w;
  if (const auto* m = std::get_if<ComplexMatrix>(&state.value)) {
    try {
      return density_to_weights(*m, {.equality = tol});
    } catch (const Error& e) {
      throw InputError(state.source + ": matrix: " + e.what());
    }
  }
  throw InputError(state.source + ": kind: expected weights or a Bell-diagonal density matrix");
}

ComplexMatrix as_density(const StateFile& state) {
  if (const auto* w = std::get_if<WeightVector>(&state.value)) return weights_to_density(*w);
  if (const auto* m = std::get_if<ComplexMatrix>(&state.value)) return *m;
  throw InputError(state.source + ": kind: expected weights or a density matrix");
}

}  // namespace slocc::cli
