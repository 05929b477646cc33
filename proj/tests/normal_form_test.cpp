#include <gtest/gtest.h>

#include "slocc/choi_maps.hpp"
#include "slocc/eigensystem.hpp"
#include "slocc/error.hpp"
#include "slocc/normal_form.hpp"
#include "slocc/tensor.hpp"
#include "test_support.hpp"

using namespace slocc;

namespace {

WeightVector wv(double a, double b, double c, double d) { return WeightVector::from({a, b, c, d}); }

// Independent route to the Bell weights of a state with maximally mixed
// marginals: singular values of the correlation matrix T with the sign of
// det T give the correlation coordinates up to local rotations.
std::array<double, 4> weights_from_correlations(const ComplexMatrix& rho) {
  const auto t = correlation_matrix(rho);
  ComplexMatrix tt(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += t[k][i] * t[k][j];
      tt(i, j) = acc;
    }
  }
  const double det = t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) - t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
        t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
  const auto ev = hermitian_eigenvalues(tt);
  std::array<double, 3> s{};
  for (int k = 0; k < 3; ++k) s[k] = std::sqrt(std::max(ev[k], 0.0));
  // Local rotations reach T = diag(d) with |d| = s and sign(d0 d1 d2) = sign(det T);
  // flipping two signs only permutes the Bell labels.
  const double sign = det < 0 ? -1.0 : 1.0;
  const std::array<double, 3> d = {sign * s[0], sign * s[1], sign * s[2]};
  const std::array<std::array<double, 3>, 4> signs = {{{1, -1, 1}, {-1, 1, 1}, {1, 1, -1}, {-1, -1, -1}}};
  std::array<double, 4> w{};
  for (int k = 0; k < 4; ++k) w[k] = (1.0 + signs[k][0] * d[0] + signs[k][1] * d[1] + signs[k][2] * d[2]) / 4.0;
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

ComplexMatrix pure_state(double theta) {
  std::vector<Complex> v = {std::cos(theta), 0.0, 0.0, std::sin(theta)};
  return ComplexMatrix::outer(v, v);
}

}  // namespace

TEST(filter_iteration, bell_diagonal_fixed_point) {
  const auto rho = weights_to_density(wv(0.7, 0.1, 0.1, 0.1));
  const auto f = filter_iteration(rho);
  EXPECT_TRUE(f.converged);
  EXPECT_EQ(f.iterations, 1u);
  EXPECT_LT(max_abs_diff(f.state, rho), 1e-15);
}

TEST(filter_iteration, pure_state_becomes_maximally_entangled) {
  const auto f = filter_iteration(pure_state(M_PI / 8));
  ASSERT_TRUE(f.converged);
  const auto ev = hermitian_eigenvalues(f.state);
  EXPECT_NEAR(ev[3], 1.0, 1e-10);
  EXPECT_NEAR(trace_of_product(f.state, bell_projectors()[0]).real(), 1.0, 1e-10);
}

TEST(filter_iteration, nd_family_does_not_converge) {
  const auto f = filter_iteration(rho_nd(0.3));
  EXPECT_FALSE(f.converged);
}

TEST(filter_iteration, random_full_rank_states_converge_quickly) {
  Rng rng(40);
  for (int t = 0; t < 100; ++t) {
    const auto f = filter_iteration(rng.density_matrix(4, 4));
    ASSERT_TRUE(f.converged);
    EXPECT_LE(f.iterations, 200u);
    EXPECT_LE(f.marginal_deviation, 1e-10);
  }
}

TEST(classify, worked_examples) {
  auto r = classify(weights_to_density(wv(0.7, 0.1, 0.1, 0.1)));
  ASSERT_EQ(r.state_class, StateClass::BellDiagonal);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR((*r.lambda)[k], wv(0.7, 0.1, 0.1, 0.1)[k], 1e-12);

  EXPECT_EQ(classify(Complex(0.25) * ComplexMatrix::identity(4)).state_class, StateClass::Separable);

  r = classify(rho_nd(0.3));
  ASSERT_EQ(r.state_class, StateClass::NDClass);
  EXPECT_NEAR(r.b, 0.3, 1e-9);
  EXPECT_NEAR((*r.lambda)[0], 0.8, 1e-9);
  EXPECT_NEAR((*r.lambda)[1], 0.2, 1e-9);
}

TEST(classify, nd_parameter_survives_filters) {
  Rng rng(41);
  for (double b : {0.05, 0.2, 0.3, 0.45, 0.5}) {
    const auto f = fixtures::random_filter(rng, 10.0);
    const auto g = fixtures::random_filter(rng, 10.0);
    const auto rho = fixtures::filtered(rho_nd(b), f, g);
    EXPECT_NEAR(nd_parameter(rho), b, 1e-9) << b;
    const auto r = classify(rho);
    EXPECT_EQ(r.state_class, StateClass::NDClass);
  }
}

TEST(classify, agrees_with_ppt_on_all_ranks) {
  Rng rng(42);
  for (int t = 0; t < 300; ++t) {
    const auto rho = rng.density_matrix(4, 1 + t % 4);
    const auto r = classify(rho);
    EXPECT_EQ(r.state_class == StateClass::Separable, is_ppt(rho));
  }
}

TEST(classify, converged_weights_match_correlation_route) {
  Rng rng(43);
  for (int t = 0; t < 50; ++t) {
    const auto rho = rng.density_matrix(4, 4);
    const auto f = filter_iteration(rho);
    ASSERT_TRUE(f.converged);
    const auto ev = hermitian_eigenvalues(f.state);
    const auto w = weights_from_correlations(f.state);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(w[k], ev[3 - k], 1e-8);
  }
}

TEST(bd_equivalent, worked_examples) {
  const auto bell = bd_equivalent(bell_projectors()[0]);
  EXPECT_NEAR(bell[0], 1.0, 1e-12);
  const auto half = bd_equivalent(rho_nd(0.5));
  EXPECT_NEAR(half[0], 1.0, 1e-9);
  EXPECT_NEAR(half[1], 0.0, 1e-9);
  try {
    bd_equivalent(Complex(0.25) * ComplexMatrix::identity(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SeparableInput);
  }
}

TEST(bd_equivalent, invariant_under_product_filters) {
  Rng rng(44);
  const auto base = wv(0.6, 0.2, 0.1, 0.1);
  for (int t = 0; t < 100; ++t) {
    const auto rho = fixtures::filtered(weights_to_density(base), fixtures::random_filter(rng, 10.0),
                                       fixtures::random_filter(rng, 10.0));
    const auto l = bd_equivalent(rho);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(l[k], base[k], 1e-6);
  }
}

TEST(can_convert_two_qubit, rules) {
  const auto mixed = Complex(0.25) * ComplexMatrix::identity(4);
  auto d = can_convert_two_qubit(bell_projectors()[0], mixed);
  EXPECT_TRUE(d.convertible);
  EXPECT_EQ(d.rule, DecisionRule::TargetSeparable);
  d = can_convert_two_qubit(mixed, bell_projectors()[0]);
  EXPECT_FALSE(d.convertible);
  EXPECT_EQ(d.rule, DecisionRule::SeparableSourceEntangledTarget);

  Rng rng(45);
  const auto src = fixtures::filtered(weights_to_density(wv(0.7, 0.1, 0.1, 0.1)), fixtures::random_filter(rng, 5),
                                     fixtures::random_filter(rng, 5));
  const auto dst = fixtures::filtered(weights_to_density(wv(0.6, 0.2, 0.1, 0.1)), fixtures::random_filter(rng, 5),
                                     fixtures::random_filter(rng, 5));
  EXPECT_TRUE(can_convert_two_qubit(src, dst).convertible);
  d = can_convert_two_qubit(dst, src);
  EXPECT_FALSE(d.convertible);
  EXPECT_EQ(d.violated_monotone, 1);
}

TEST(normal_form, rejects_invalid_states) {
  ComplexMatrix bad = ComplexMatrix::identity(4);
  try {
    classify(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidState);
  }
}

TEST(concurrence, known_values) {
  EXPECT_NEAR(concurrence(pure_state(M_PI / 8)), std::sin(M_PI / 4), 1e-12);
  EXPECT_NEAR(concurrence(weights_to_density(wv(0.7, 0.1, 0.1, 0.1))), 0.4, 1e-12);
  EXPECT_NEAR(concurrence(rho_nd(0.3)), 0.3, 1e-12);
}
