// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "slocc/choi_maps.hpp"
#include "slocc/convertibility.hpp"
#include "slocc/convex_membership.hpp"
#include "slocc/eigensystem.hpp"
#include "slocc/error.hpp"
#include "slocc/normal_form.hpp"
#include "slocc/real_linalg.hpp"
#include "slocc/separability.hpp"
#include "slocc/tensor.hpp"
#include "slocc_cli/commands.hpp"
#include "slocc_cli/state_file.hpp"
#include "test_support.hpp"

using namespace slocc;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

// Skewed random r-matrix: powers of uniforms concentrate mass on few entries,
// so a sizeable fraction is entangled.
RMatrix skewed_rmatrix(Rng& rng) {
  RMatrix r;
  const double power = 1.0 + 6.0 * rng.uniform();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = std::pow(rng.uniform(), power);
  }
  return r.normalized();
}

RMatrix all_ones() {
  RMatrix r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = 1.0;
  }
  return r;
}

double min_witness(const RMatrix& r, std::optional<WitnessFamily> only = std::nullopt) {
  double best = 1e300;
  for (const auto& w : witness_orbit()) {
    if (only && w.family != *only) continue;
    best = std::min(best, witness_value(w, r));
  }
  return best;
}

bool lp_inside_vertices(const RMatrix& r) {
  LpProblem p;
  for (const auto& v : vertex_set()) p.vertices.push_back(v.r.flatten());
  p.query = r.flatten();
  return is_inside(convex_membership(p));
}

double cut_pt_min_eigenvalue(const RMatrix& r) {
  const std::array<std::size_t, 4> dims = {2, 2, 2, 2};
  ComplexMatrix m = partial_transpose(assemble(r, QubitOrdering::Cut), dims, 2);
  m = partial_transpose(m, dims, 3);
  return min_eigenvalue(m, 1e-12);
}

// AC1 ----------------------------------------------------------------------

std::optional<WeightVector> near_facet_target(Rng& rng, const WeightVector& l) {
  const auto verts = plambda_vertices(l);
  auto find = [&](const std::array<double, 4>& w) {
    for (const auto& v : verts) {
      if (v.weights == w) return true;
    }
    return false;
  };
  const auto& x = l.values();
  std::vector<std::array<double, 4>> facet;
  switch (rng.index(3)) {
    case 0:
      facet = {x, {x[0], x[1], x[3], x[2]}, {x[0], x[2], x[3], x[1]}, {x[0], x[3], x[2], x[1]},
               {x[0], x[3], x[1], x[2]}, {x[0], x[2], x[1], x[3]}};
      break;
    case 1:
      facet = {x, {0.5, 0.5, 0, 0}, {x[0], x[1], x[3], x[2]}};
      break;
    default:
      facet = {x, {0.5, 0.5, 0, 0}, {0.5, 0, 0.5, 0}, {x[0], x[2], x[1], x[3]}};
      break;
  }
  std::array<double, 4> p{};
  double total = 0.0;
  for (const auto& f : facet) {
    if (!find(f)) continue;
    const double c = rng.uniform();
    for (std::size_t k = 0; k < 4; ++k) p[k] += c * f[k];
    total += c;
  }
  for (double& v : p) v /= total;
  // Perturb inside the simplex plane by at most 1e-3 per coordinate.
  std::array<double, 4> d{};
  double mean = 0.0;
  for (double& v : d) {
    v = rng.uniform(-1e-3, 1e-3);
    mean += v / 4.0;
  }
  for (std::size_t k = 0; k < 4; ++k) p[k] += d[k] - mean;
  if (*std::min_element(p.begin(), p.end()) < 0.0) return std::nullopt;
  double sum = p[0] + p[1] + p[2] + p[3];
  for (double& v : p) v /= sum;
  if (!(p[0] >= p[1] && p[1] >= p[2] && p[2] >= p[3]) || p[0] <= 0.5 + 1e-9) return std::nullopt;
  return WeightVector::from(p);
}

Outcome ac1() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(101);
  int agree = 0, near = 0, total = 0, yes = 0;
  while (total < 10000) {
    const auto l = fixtures::random_ordered_entangled(rng, 1e-9);
    std::optional<WeightVector> lp;
    if (total % 5 == 0) {
      lp = near_facet_target(rng, l);
      if (!lp) continue;
    } else {
      lp = fixtures::random_ordered_entangled(rng, 1e-9);
    }
    const auto f = facet_inequalities(l, *lp);
    bool is_near = false;
    for (const auto& g : f) is_near = is_near || std::abs(g.coordinate.lhs - g.coordinate.bound) <= 1e-3;
    near += is_near ? 1 : 0;
    const bool theorem = can_convert_bd(l, *lp).convertible;
    agree += theorem == lp_oracle_membership(l, *lp) ? 1 : 0;
    yes += theorem ? 1 : 0;
    ++total;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {agree == total && near >= 1000 && seconds < 60.0,
          std::to_string(agree) + "/" + std::to_string(total) + " agree, " + std::to_string(near) +
              " near a facet, " + std::to_string(yes) + " convertible, " + fmt(seconds) + " s"};
}

// AC2 ----------------------------------------------------------------------

Outcome ac2() {
  Rng rng(202);
  int mixtures_ok = 0, entangled_ok = 0, entangled_seen = 0;
  for (int t = 0; t < 1000; ++t) {
    RMatrix r;
    double total = 0.0;
    const std::size_t terms = 1 + rng.index(8);
    for (std::size_t k = 0; k < terms; ++k) {
      const double c = rng.uniform();
      r += c * vertex_set()[rng.index(60)].r;
      total += c;
    }
    r *= 1.0 / total;
    const bool lp = lp_inside_vertices(r);
    const bool witnesses = min_witness(r) >= -1e-10;
    mixtures_ok += (lp == witnesses && lp) ? 1 : 0;
  }
  while (entangled_seen < 1000) {
    const RMatrix r = skewed_rmatrix(rng);
    const double w = min_witness(r);
    if (w >= -1e-10) continue;
    ++entangled_seen;
    entangled_ok += lp_inside_vertices(r) ? 0 : 1;
  }
  return {mixtures_ok == 1000 && entangled_ok == 1000,
          "mixtures " + std::to_string(mixtures_ok) + "/1000, entangled " + std::to_string(entangled_ok) + "/1000"};
}

// AC3 ----------------------------------------------------------------------

Outcome ac3() {
  Rng rng(303);
  int agree = 0, ppt = 0;
  for (int t = 0; t < 1000; ++t) {
    // Odd draws are mixed with white noise to populate the PPT side.
    RMatrix r = skewed_rmatrix(rng);
    if (t % 2 == 1) {
      const double p = rng.uniform();
      r = (1.0 - p) * r + (p / 16.0) * all_ones();
    }
    const bool a = cut_pt_min_eigenvalue(r) >= -1e-10;
    const bool b = min_witness(r, WitnessFamily::W1) >= -1e-10;
    agree += a == b ? 1 : 0;
    ppt += a ? 1 : 0;
  }
  return {agree == 1000, std::to_string(agree) + "/1000 agree (" + std::to_string(ppt) + " PPT)"};
}

// AC4 ----------------------------------------------------------------------

Outcome ac4() {
  bool ok = true;
  std::string detail;
  for (int f = 0; f < 5; ++f) {
    const RMatrix w = canonical_witness(static_cast<WitnessFamily>(f));
    double lowest = 1e300;
    std::vector<std::vector<double>> touching;
    for (const auto& v : vertex_set()) {
      const double value = pairing(w, v.r);
      lowest = std::min(lowest, value);
      if (std::abs(value) <= 1e-12) touching.push_back(v.r.flatten());
    }
    const std::size_t dim = affine_dimension(touching);
    ok = ok && std::abs(lowest) <= 1e-12 && dim == 14;
    detail += std::string(f ? ", " : "") + "W" + std::to_string(f) + " min " + fmt(lowest) + " dim " +
              std::to_string(dim);
  }
  return {ok, detail};
}

// AC5 ----------------------------------------------------------------------

Outcome ac5() {
  double residual = 1e300;
  std::string label;
  try {
    const auto check = verify_extension_certificate_w2(1e-10);
    residual = check.residual;
    label = check.encoding.label();
  } catch (const Error& e) {
    return {false, e.what()};
  }
  const double zmin = min_eigenvalue(extension_z2());
  const auto p = symmetric_projector(4);
  RealRows rows(16, std::vector<double>(16));
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) rows[i][j] = p(i, j).real();
  }
  const std::size_t rank = matrix_rank(rows);
  return {residual <= 1e-10 && zmin >= -1e-12 && rank == 10,
          "residual " + fmt(residual) + " [" + label + "], min eig " + fmt(zmin) + ", rank " + std::to_string(rank)};
}

// AC6 ----------------------------------------------------------------------

Outcome ac6() {
  double worst = 1e300;
  std::string detail;
  for (auto f : {WitnessFamily::W1, WitnessFamily::W2, WitnessFamily::W3, WitnessFamily::W4}) {
    const double m =
        seesaw_min_product(assemble(canonical_witness(f), QubitOrdering::Cut), {.restarts = 200, .seed = 6}).minimum;
    worst = std::min(worst, m);
    detail += std::string(to_string(f)) + " " + fmt(m) + ", ";
  }
  const double control =
      seesaw_min_product(assemble(RMatrix::unit(3, 0, -1.0), QubitOrdering::Cut), {.restarts = 200, .seed = 6}).minimum;
  return {worst >= -1e-8 && control <= -0.2, detail + "control " + fmt(control)};
}

// AC7 ----------------------------------------------------------------------

Outcome ac7() {
  Rng rng(707);
  double round_trip = 0.0, action = 0.0;
  for (const auto& v : vertex_set()) {
    const auto map = kraus_for_vertex(v.r);
    round_trip = std::max(round_trip, max_abs_diff(cj_rmatrix(map), v.r));
    const auto cj = cj_state(map);
    for (int t = 0; t < 20; ++t) {
      const auto rho = rng.density_matrix(4, 1 + rng.index(4));
      action = std::max(action, max_abs_diff(cj_action(cj, rho), kraus_action(map, rho)));
    }
  }
  return {round_trip <= 1e-10 && action <= 1e-10,
          "60 vertices, round trip " + fmt(round_trip) + ", CJ action " + fmt(action)};
}

// AC8 ----------------------------------------------------------------------

Outcome ac8() {
  double worst = 0.0;
  std::string probs;
  for (double b : {0.0, 0.1, 0.25, 0.4, 0.5}) {
    const auto out = apply_map_density(quasi_reverse_map(b), rho_nd_prime(b));
    worst = std::max(worst, max_abs_diff(out.state, rho_nd(b)));
    probs += (probs.empty() ? "" : " ") + fmt(out.success_probability);
  }
  return {worst <= 1e-10, "rho_ND'(b) -> rho_ND(b), max deviation " + fmt(worst) + ", success " + probs};
}

// AC9 ----------------------------------------------------------------------

Outcome ac9() {
  Rng rng(909);
  int converged = 0;
  std::size_t max_iter = 0;
  double max_dev = 0.0;
  for (int t = 0; t < 500; ++t) {
    const auto f = filter_iteration(rng.density_matrix(4, 4));
    if (f.converged && f.iterations <= 200 && f.marginal_deviation <= 1e-10) ++converged;
    max_iter = std::max(max_iter, f.iterations);
    max_dev = std::max(max_dev, f.marginal_deviation);
  }
  double invariance = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto rho = rng.density_matrix(4, 4);
    if (is_ppt(rho)) continue;
    const auto base = bd_equivalent(rho);
    const auto moved = bd_equivalent(fixtures::filtered(rho, fixtures::random_filter(rng, 10.0),
                                                        fixtures::random_filter(rng, 10.0)));
    for (std::size_t k = 0; k < 4; ++k) invariance = std::max(invariance, std::abs(base[k] - moved[k]));
  }
  int agree = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto rho = rng.density_matrix(4, 1 + t % 4);
    agree += (classify(rho).state_class == StateClass::Separable) == is_ppt(rho) ? 1 : 0;
  }
  return {converged == 500 && invariance <= 1e-6 && agree == 1000,
          std::to_string(converged) + "/500 converged (max " + std::to_string(max_iter) + " iterations, dev " +
              fmt(max_dev) + "), lambda drift " + fmt(invariance) + ", classify/PPT " + std::to_string(agree) +
              "/1000"};
}

// AC10 ---------------------------------------------------------------------

Outcome ac10() {
  const std::array<std::array<double, 3>, 4> expected = {{{-1, 1, -1}, {1, -1, -1}, {-1, -1, 1}, {1, 1, 1}}};
  bool ok = true;
  std::string detail;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto c = correlation_coords(bell_projectors()[k]);
    ok = ok && c.x == expected[k][0] && c.y == expected[k][1] && c.z == expected[k][2];
    detail += "(" + fmt(c.x) + "," + fmt(c.y) + "," + fmt(c.z) + ")";
  }
  return {ok, detail};
}

// AC11 ---------------------------------------------------------------------

Outcome ac11() {
  Rng rng(1111);
  double worst = 0.0;
  int n = 0;
  while (n < 100) {
    const auto l = fixtures::random_ordered_entangled(rng);
    if (!(l[0] > l[1])) continue;
    const auto f = facet_inequalities(l, l);
    worst = std::max({worst, std::abs(f[1].coordinate.lhs - 1.0), std::abs(f[2].coordinate.lhs - 1.0)});
    ++n;
  }
  return {worst <= 1e-10, "max |lhs - 1| = " + fmt(worst)};
}

// AC12 ---------------------------------------------------------------------

Outcome ac12() {
  const auto dir = std::filesystem::temp_directory_path() / "slocc_acceptance";
  std::filesystem::create_directories(dir);
  const std::string src = (dir / "src.json").string(), dst = (dir / "dst.json").string();
  std::ofstream(src) << R"({"kind":"weights","lambda":[0.7,0.1,0.1,0.1]})";
  std::ofstream(dst) << R"({"kind":"weights","lambda":[0.6,0.2,0.1,0.1]})";
  auto call = [](const std::vector<std::string>& args, std::string& out) {
    std::istringstream in;
    std::ostringstream o, e;
    const int code = cli::run_cli(args, in, o, e);
    out = o.str();
    return code;
  };
  std::string out_yes, out_no;
  const int yes_code = call({"convert", "--json", src, dst}, out_yes);
  const int no_code = call({"convert", "--json", dst, src}, out_no);
  std::filesystem::remove_all(dir);

  const json yes = json::parse(out_yes);
  const json no = json::parse(out_no);
  // Replay the printed map independently of the tool's own check.
  RMatrix r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = yes["map"][i][j].get<double>();
  }
  const auto replay = map_action_bd(r, WeightVector::from({0.7, 0.1, 0.1, 0.1}));
  const std::array<double, 4> target = {0.6, 0.2, 0.1, 0.1};
  double dev = 0.0;
  for (std::size_t k = 0; k < 4; ++k) dev = std::max(dev, std::abs(replay.weights[k] - target[k]));
  const bool ok = yes_code == 0 && yes["answer"] == "YES" && dev <= 1e-10 && no_code == 1 && no["answer"] == "NO" &&
                  no["violated"] == "E1";
  return {ok, "YES replay deviation " + fmt(dev) + "; reverse " + no["answer"].get<std::string>() + " (" +
                  no["reason"].get<std::string>() + ")"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 monotone decision equals LP membership on 10^4 pairs", ac1},
      {"AC2 vertex LP equals witness scan", ac2},
      {"AC3 PPT equals W1 family", ac3},
      {"AC4 witnesses are facets", ac4},
      {"AC5 W2 extension certificate", ac5},
      {"AC6 witness see-saw", ac6},
      {"AC7 CJ round trips and action", ac7},
      {"AC8 quasi-reverse map", ac8},
      {"AC9 normal form", ac9},
      {"AC10 Bell coordinates", ac10},
      {"AC11 facet saturation", ac11},
      {"AC12 end-to-end convert", ac12},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " | " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed;
}
