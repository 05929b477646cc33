#include "slocc/separability.hpp"

#include <algorithm>
#include <sstream>

#include "slocc/convex_membership.hpp"
#include "slocc/error.hpp"

namespace slocc {
namespace {

std::vector<Perm4> all_permutations() {
  std::vector<Perm4> perms;
  Perm4 p = kIdentityPerm;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

template <typename Emit>
void for_each_distinct_image(const RMatrix& canonical, Emit emit) {
  static const std::vector<Perm4> perms = all_permutations();
  std::vector<RMatrix> seen;
  for (const auto& rp : perms) {
    for (const auto& cp : perms) {
      RMatrix image = permute(canonical, rp, cp);
      if (std::find(seen.begin(), seen.end(), image) != seen.end()) continue;
      seen.push_back(image);
      emit(image, rp, cp);
    }
  }
}

std::string perm_string(const Perm4& p) {
  std::ostringstream out;
  out << '(' << p[0] + 1 << p[1] + 1 << p[2] + 1 << p[3] + 1 << ')';
  return out.str();
}

}  // namespace

RMatrix canonical_d0() {
  RMatrix r;
  for (std::size_t i = 0; i < 4; ++i) r(i, i) = 0.25;
  return r;
}

RMatrix canonical_g0() {
  RMatrix r;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = 0.25;
  }
  return r;
}

const std::vector<Vertex>& vertex_set() {
  static const std::vector<Vertex> vertices = [] {
    std::vector<Vertex> v;
    for_each_distinct_image(canonical_d0(), [&](const RMatrix& r, const Perm4& rp, const Perm4& cp) {
      v.push_back({r, VertexKind::D0, rp, cp});
    });
    for_each_distinct_image(canonical_g0(), [&](const RMatrix& r, const Perm4& rp, const Perm4& cp) {
      v.push_back({r, VertexKind::G0, rp, cp});
    });
    return v;
  }();
  return vertices;
}

std::string describe(const Vertex& v) {
  std::ostringstream out;
  if (v.kind == VertexKind::D0) {
    out << "D0";
  } else {
    out << "G0";
  }
  out << " rows" << perm_string(v.row_perm) << " cols" << perm_string(v.col_perm);
  return out.str();
}

std::string_view to_string(WitnessFamily family) {
  switch (family) {
    case WitnessFamily::W0: return "W0";
    case WitnessFamily::W1: return "W1";
    case WitnessFamily::W2: return "W2";
    case WitnessFamily::W3: return "W3";
    case WitnessFamily::W4: return "W4";
  }
  return "?";
}

RMatrix canonical_witness(WitnessFamily family) {
  switch (family) {
    case WitnessFamily::W0:
      return RMatrix::unit(0, 0);
    case WitnessFamily::W1:
      return RMatrix({{{1, 1, 1, -1}, {1, 1, 1, -1}, {1, 1, 1, -1}, {-1, -1, -1, 1}}});
    case WitnessFamily::W2:
      return RMatrix({{{1, 1, 0, -1}, {0, 0, 1, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}}});
    case WitnessFamily::W3:
      return RMatrix({{{3, 3, 1, -1}, {3, -1, 1, 3}, {1, 1, 3, 1}, {-1, -1, 1, -1}}});
    case WitnessFamily::W4:
      return RMatrix({{{3, 3, 1, -1}, {3, -1, 1, 3}, {3, -1, 1, -1}, {1, 1, -1, 1}}});
  }
  throw Error(ErrorCode::InternalInconsistency, "unknown witness family");
}

const std::vector<Witness>& witness_orbit() {
  static const std::vector<Witness> orbit = [] {
    std::vector<Witness> out;
    for (auto family : {WitnessFamily::W0, WitnessFamily::W1, WitnessFamily::W2,
                        WitnessFamily::W3, WitnessFamily::W4}) {
      for_each_distinct_image(canonical_witness(family),
                              [&](const RMatrix& w, const Perm4& rp, const Perm4& cp) {
                                out.push_back({w, family, rp, cp});
                              });
    }
    return out;
  }();
  return orbit;
}

std::array<std::size_t, 5> witness_family_sizes() {
  std::array<std::size_t, 5> sizes{};
  for (const auto& w : witness_orbit()) ++sizes[static_cast<std::size_t>(w.family)];
  return sizes;
}

double witness_value(const Witness& w, const RMatrix& r) { return pairing(w.w, r); }

SeparabilityCertificate is_separable(const RMatrix& r, const Tolerances& tol) {
  if (!r.is_state(tol)) {
    throw Error(ErrorCode::InvalidState, "r-matrix must be nonnegative with unit sum");
  }
  const auto& vertices = vertex_set();
  LpProblem problem;
  problem.vertices.reserve(vertices.size());
  for (const auto& v : vertices) problem.vertices.push_back(v.r.flatten());
  problem.query = r.flatten();
  const MembershipResult lp = convex_membership(problem, {.feasibility_tol = tol.equality});

  const Witness* violated = nullptr;
  double violated_value = 0.0;
  for (const auto& w : witness_orbit()) {
    const double value = witness_value(w, r);
    if (value < -tol.equality) {
      violated = &w;
      violated_value = value;
      break;
    }
  }

  if (const auto* in = std::get_if<Inside>(&lp)) {
    if (violated != nullptr) {
      std::ostringstream msg;
      msg << "LP finds a convex decomposition but witness " << to_string(violated->family)
          << " evaluates to " << violated_value;
      throw Error(ErrorCode::InternalInconsistency, msg.str());
    }
    ConvexDecomposition d;
    for (std::size_t k = 0; k < in->coefficients.size(); ++k) {
      if (in->coefficients[k] > 0.0) {
        d.vertex_indices.push_back(k);
        d.weights.push_back(in->coefficients[k]);
      }
    }
    return {std::move(d)};
  }
  if (violated == nullptr) {
    throw Error(ErrorCode::InternalInconsistency,
                "LP separates the state from the polytope but no witness is violated");
  }
  return {ViolatedWitness{*violated, violated_value}};
}

bool verify_certificate(const RMatrix& r, const SeparabilityCertificate& cert, const Tolerances& tol) {
  if (const auto* d = std::get_if<ConvexDecomposition>(&cert.proof)) {
    if (d->vertex_indices.size() != d->weights.size()) return false;
    RMatrix rebuilt;
    double total = 0.0;
    for (std::size_t k = 0; k < d->weights.size(); ++k) {
      if (d->weights[k] < 0.0 || d->vertex_indices[k] >= vertex_set().size()) return false;
      rebuilt += d->weights[k] * vertex_set()[d->vertex_indices[k]].r;
      total += d->weights[k];
    }
    return std::abs(total - 1.0) <= tol.equality && max_abs_diff(rebuilt, r) <= tol.reconstruction;
  }
  const auto& v = std::get<ViolatedWitness>(cert.proof);
  const RMatrix expected = permute(canonical_witness(v.witness.family), v.witness.row_perm,
                                   v.witness.col_perm);
  return expected == v.witness.w && witness_value(v.witness, r) < -tol.equality;
}

}  // namespace slocc
