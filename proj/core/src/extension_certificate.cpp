#include <array>
#include <limits>
#include <sstream>

#include "slocc/error.hpp"
#include "slocc/separability.hpp"
#include "slocc/tensor.hpp"

namespace slocc {
namespace {

struct Term {
  int coefficient;
  std::size_t a1, a2, b;
};

// |z_k> written as sums of |a1 a2, b>.
const std::array<std::array<Term, 6>, 4> kZVectors = {{
    {{{1, 0, 1, 0}, {-1, 0, 2, 3}, {1, 1, 1, 1}, {1, 1, 3, 3}, {1, 2, 2, 1}, {1, 2, 3, 0}}},
    {{{1, 1, 0, 3}, {1, 1, 1, 2}, {1, 2, 0, 0}, {1, 2, 2, 2}, {-1, 3, 1, 0}, {1, 3, 2, 3}}},
    {{{1, 0, 0, 0}, {1, 0, 2, 2}, {1, 1, 0, 1}, {-1, 1, 3, 2}, {1, 3, 2, 1}, {1, 3, 3, 0}}},
    {{{1, 0, 0, 3}, {1, 0, 1, 2}, {-1, 2, 0, 1}, {1, 2, 3, 2}, {1, 3, 1, 1}, {1, 3, 3, 3}}},
}};

}  // namespace

std::string QuditEncoding::label() const {
  std::string out = a_prime_most_significant ? "A=|a'a''>" : "A=|a''a'>";
  out += b_prime_most_significant ? ", B=|b'b''>" : ", B=|b''b'>";
  return out;
}

ComplexMatrix extension_z2() {
  ComplexMatrix z(64, 64);
  for (const auto& terms : kZVectors) {
    std::vector<Complex> v(64, 0.0);
    for (const auto& t : terms) v[16 * t.a1 + 4 * t.a2 + t.b] += static_cast<double>(t.coefficient);
    z += Complex(0.5) * ComplexMatrix::outer(v, v);
  }
  return z;
}

ComplexMatrix symmetric_projector(std::size_t d) {
  ComplexMatrix p(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      p(i * d + j, i * d + j) += 0.5;
      p(i * d + j, j * d + i) += 0.5;
    }
  }
  return p;
}

ComplexMatrix witness_operator(const RMatrix& w, const QuditEncoding& encoding) {
  static constexpr std::array<std::size_t, 4> kDims = {2, 2, 2, 2};
  // CUT order is A' A'' B' B''; reversing a pair puts the double-primed qubit first.
  const std::array<std::size_t, 4> order = {
      encoding.a_prime_most_significant ? 0u : 1u, encoding.a_prime_most_significant ? 1u : 0u,
      encoding.b_prime_most_significant ? 2u : 3u, encoding.b_prime_most_significant ? 3u : 2u};
  return permute_subsystems(assemble(w, QubitOrdering::Cut), kDims, order);
}

ExtensionCheck verify_extension_certificate_w2(double tol) {
  static constexpr std::array<std::size_t, 3> kDims = {4, 4, 4};
  const ComplexMatrix projector = kron(symmetric_projector(4), ComplexMatrix::identity(4));
  const ComplexMatrix rhs =
      projector * partial_transpose(extension_z2(), kDims, 0) * projector;
  const RMatrix w2 = canonical_witness(WitnessFamily::W2);

  ExtensionCheck check{std::numeric_limits<double>::infinity(), {}, {}};
  for (bool a_msb : {true, false}) {
    for (bool b_msb : {true, false}) {
      const QuditEncoding enc{a_msb, b_msb};
      const ComplexMatrix lhs =
          projector * kron(ComplexMatrix::identity(4), witness_operator(w2, enc)) * projector;
      const double residual = max_abs_diff(lhs, rhs);
      check.all.push_back({enc, residual});
      if (residual < check.residual) {
        check.residual = residual;
        check.encoding = enc;
      }
    }
  }
  if (check.residual > tol) {
    std::ostringstream msg;
    msg << "no qudit encoding satisfies the extension identity;";
    for (const auto& r : check.all) msg << " [" << r.encoding.label() << "] " << r.residual;
    throw Error(ErrorCode::NoEncodingMatches, msg.str());
  }
  return check;
}

}  // namespace slocc
