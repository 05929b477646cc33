#pragma once

namespace slocc {

/// Numerical thresholds shared by every module. Acceptance tests and the CLI
/// `--tol` flag adjust these in one place.
struct Tolerances {
  double equality = 1e-10;
  double psd_slack = -1e-9;
  double hermitian = 1e-12;
  double weight_nonneg = -1e-12;
  double reconstruction = 1e-9;
};

}  // namespace slocc
