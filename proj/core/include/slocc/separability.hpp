#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "slocc/bell.hpp"
#include "slocc/matrix.hpp"
#include "slocc/symmetric_rep.hpp"
#include "slocc/tolerances.hpp"

namespace slocc {

// ---------------------------------------------------------------------------
// Vertices of the separable polytope: the row/column-permutation orbits of
// D0 = I/4 and of G0 (all-1/4 block on rows {1,2} x cols {1,2}).
// ---------------------------------------------------------------------------

enum class VertexKind { D0, G0 };

struct Vertex {
  RMatrix r;
  VertexKind kind;
  /// r == permute(canonical(kind), row_perm, col_perm)
  Perm4 row_perm;
  Perm4 col_perm;
};

RMatrix canonical_d0();
RMatrix canonical_g0();

/// 24 D0-type vertices followed by 36 G0-type vertices. Built once.
const std::vector<Vertex>& vertex_set();

std::string describe(const Vertex& v);

// ---------------------------------------------------------------------------
// Witnesses (facets).
// ---------------------------------------------------------------------------

enum class WitnessFamily { W0, W1, W2, W3, W4 };

std::string_view to_string(WitnessFamily family);

struct Witness {
  RMatrix w;
  WitnessFamily family;
  /// w == permute(canonical_witness(family), row_perm, col_perm)
  Perm4 row_perm;
  Perm4 col_perm;
};

RMatrix canonical_witness(WitnessFamily family);

/// Every distinct row/column permutation of W0..W4, W0 family first.
const std::vector<Witness>& witness_orbit();

/// Number of distinct orbit members per family, indexed by family.
std::array<std::size_t, 5> witness_family_sizes();

/// sum_ij W_ij r_ij, i.e. tr(Z_w rho) by orthonormality of the Bell projectors.
double witness_value(const Witness& w, const RMatrix& r);

// ---------------------------------------------------------------------------
// Membership decision.
// ---------------------------------------------------------------------------

struct ConvexDecomposition {
  std::vector<std::size_t> vertex_indices;  // into vertex_set()
  std::vector<double> weights;
};

struct ViolatedWitness {
  Witness witness;
  double value;
};

struct SeparabilityCertificate {
  std::variant<ConvexDecomposition, ViolatedWitness> proof;

  bool separable() const { return std::holds_alternative<ConvexDecomposition>(proof); }
};

/// Decides separability across A'A''|B'B'' by LP against vertex_set() and,
/// independently, by scanning witness_orbit(). Throws InvalidState for
/// non-states and InternalInconsistency if the two routes disagree.
SeparabilityCertificate is_separable(const RMatrix& r, const Tolerances& tol = {});

/// Recomputes a certificate from scratch.
bool verify_certificate(const RMatrix& r, const SeparabilityCertificate& cert,
                        const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Numerical witness validation.
// ---------------------------------------------------------------------------

struct SeesawResult {
  double minimum;
  std::vector<Complex> alpha;
  std::vector<Complex> beta;
};

struct SeesawOptions {
  std::size_t restarts = 200;
  std::uint64_t seed = 0;
  std::size_t max_sweeps = 500;
  double convergence = 1e-12;
  std::size_t dim_a = 4;
  std::size_t dim_b = 4;
};

/// Alternating minimization of <alpha beta| Z |alpha beta> over unit product
/// vectors. The result is an upper bound on the true product-state minimum.
SeesawResult seesaw_min_product(const ComplexMatrix& z, const SeesawOptions& options = {});

/// How a four-level local index i = 0..3 maps onto two qubits.
struct QuditEncoding {
  bool a_prime_most_significant = true;  // |i> = |a' a''> vs |a'' a'>
  bool b_prime_most_significant = true;

  std::string label() const;
};

struct EncodingResidual {
  QuditEncoding encoding;
  double residual;
};

struct ExtensionCheck {
  double residual;           // best over encodings
  QuditEncoding encoding;    // encoding achieving it
  std::vector<EncodingResidual> all;
};

/// (1/2) sum_k |z_k><z_k| on A1 (x) A2 (x) B (each four-level).
ComplexMatrix extension_z2();

/// Projector onto the symmetric subspace of C^d (x) C^d.
ComplexMatrix symmetric_projector(std::size_t d);

/// assemble(w, Cut) expressed in the given qudit encoding.
ComplexMatrix witness_operator(const RMatrix& w, const QuditEncoding& encoding);

/// Checks  P (I (x) Z_w2) P == P (Z2^{T_A1}) P  with P = pi_A (x) I_B for
/// every catalogued encoding. Throws NoEncodingMatches (listing residuals)
/// when none reaches `tol`.
ExtensionCheck verify_extension_certificate_w2(double tol = 1e-10);

}  // namespace slocc
