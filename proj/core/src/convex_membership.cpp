#include "slocc/convex_membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "slocc/error.hpp"
#include "slocc/real_linalg.hpp"

namespace slocc {
namespace {

constexpr int kMaxPivots = 100000;

void validate(const LpProblem& problem) {
  if (problem.vertices.empty()) {
    throw Error(ErrorCode::DegenerateInput, "convex_membership needs at least one vertex");
  }
  const std::size_t dim = problem.query.size();
  for (double x : problem.query) {
    if (!std::isfinite(x)) throw Error(ErrorCode::DegenerateInput, "non-finite query coordinate");
  }
  for (const auto& v : problem.vertices) {
    if (v.size() != dim) {
      throw Error(ErrorCode::DimMismatch, "vertex dimension differs from query dimension");
    }
    for (double x : v) {
      if (!std::isfinite(x)) throw Error(ErrorCode::DegenerateInput, "non-finite vertex coordinate");
    }
  }
}

// Phase-I tableau for  [V; 1^T] c + a = [q; 1],  c, a >= 0,  min sum(a).
// Rows are sign-flipped so the right-hand side starts nonnegative.
class PhaseOne {
 public:
  PhaseOne(const LpProblem& problem, double pivot_tol)
      : n_(problem.vertices.size()), m_(problem.query.size() + 1), pivot_tol_(pivot_tol) {
    sign_.resize(m_);
    rhs_.resize(m_);
    tableau_.assign(m_, std::vector<double>(n_ + m_, 0.0));
    for (std::size_t i = 0; i < m_; ++i) {
      const double b = i + 1 < m_ ? problem.query[i] : 1.0;
      sign_[i] = b < 0.0 ? -1.0 : 1.0;
      rhs_[i] = sign_[i] * b;
      for (std::size_t j = 0; j < n_; ++j) {
        const double a = i + 1 < m_ ? problem.vertices[j][i] : 1.0;
        tableau_[i][j] = sign_[i] * a;
      }
      tableau_[i][n_ + i] = 1.0;
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
    reduced_.assign(n_ + m_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < m_; ++i) s += tableau_[i][j];
      reduced_[j] = -s;
    }
  }

  void solve() {
    for (int iter = 0; iter < kMaxPivots; ++iter) {
      std::size_t entering = n_ + m_;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (reduced_[j] < -pivot_tol_) {
          entering = j;
          break;
        }
      }
      if (entering == n_ + m_) return;

      std::size_t leaving = m_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double t = tableau_[i][entering];
        if (t <= pivot_tol_) continue;
        const double ratio = rhs_[i] / t;
        if (ratio < best - 1e-15 ||
            (std::abs(ratio - best) <= 1e-15 && leaving < m_ && basis_[i] < basis_[leaving])) {
          best = ratio;
          leaving = i;
        }
      }
      if (leaving == m_) return;  // unbounded direction; cannot occur for phase I
      pivot(leaving, entering);
    }
    throw Error(ErrorCode::InternalInconsistency, "simplex pivot limit exceeded");
  }

  const std::vector<std::size_t>& basis() const { return basis_; }
  const std::vector<double>& sign() const { return sign_; }
  std::size_t structural() const { return n_; }
  std::size_t rows() const { return m_; }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const double p = tableau_[row][col];
    for (auto& x : tableau_[row]) x /= p;
    rhs_[row] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double f = tableau_[i][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n_ + m_; ++j) tableau_[i][j] -= f * tableau_[row][j];
      rhs_[i] -= f * rhs_[row];
      if (rhs_[i] < 0.0 && rhs_[i] > -1e-13) rhs_[i] = 0.0;
    }
    const double f = reduced_[col];
    for (std::size_t j = 0; j < n_ + m_; ++j) reduced_[j] -= f * tableau_[row][j];
    basis_[row] = col;
  }

  std::size_t n_;
  std::size_t m_;
  double pivot_tol_;
  std::vector<double> sign_;
  std::vector<double> rhs_;
  RealRows tableau_;
  std::vector<std::size_t> basis_;
  std::vector<double> reduced_;
};

double column_entry(const LpProblem& problem, const PhaseOne& lp, std::size_t row, std::size_t col) {
  const std::size_t n = lp.structural();
  const std::size_t dim = problem.query.size();
  if (col < n) {
    const double a = row < dim ? problem.vertices[col][row] : 1.0;
    return lp.sign()[row] * a;
  }
  return col - n == row ? 1.0 : 0.0;
}

}  // namespace

double AffineFunctional::operator()(std::span<const double> x) const {
  return dot(normal, x) + offset;
}

MembershipResult convex_membership(const LpProblem& problem, const MembershipOptions& options) {
  validate(problem);
  PhaseOne lp(problem, options.pivot_tol);
  lp.solve();

  const std::size_t m = lp.rows();
  const std::size_t n = lp.structural();
  const std::size_t dim = problem.query.size();
  const auto& basis = lp.basis();

  RealRows bmat(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) bmat[i][k] = column_entry(problem, lp, i, basis[k]);
  }

  // Primal polish: recompute the basic solution from the original data.
  std::vector<double> rhs(m);
  for (std::size_t i = 0; i < m; ++i) rhs[i] = lp.sign()[i] * (i < dim ? problem.query[i] : 1.0);
  if (auto xb = solve_linear(bmat, rhs)) {
    std::vector<double> coeffs(n, 0.0);
    bool nonneg = true;
    for (std::size_t k = 0; k < m; ++k) {
      if (basis[k] >= n) continue;
      if ((*xb)[k] < -options.feasibility_tol) nonneg = false;
      coeffs[basis[k]] = std::max((*xb)[k], 0.0);
    }
    double total = 0.0;
    for (double c : coeffs) total += c;
    if (nonneg && total > 0.0) {
      for (double& c : coeffs) c /= total;
      double residual = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += coeffs[j] * problem.vertices[j][i];
        residual = std::max(residual, std::abs(acc - problem.query[i]));
      }
      if (residual <= options.feasibility_tol) return Inside{std::move(coeffs)};
    }
  }

  // Dual certificate from B^T y = c_B.
  RealRows bt(m, std::vector<double>(m));
  std::vector<double> cb(m);
  for (std::size_t i = 0; i < m; ++i) {
    cb[i] = basis[i] >= n ? 1.0 : 0.0;
    for (std::size_t k = 0; k < m; ++k) bt[i][k] = bmat[k][i];
  }
  const auto yf = solve_linear(bt, cb);
  if (!yf) throw Error(ErrorCode::InternalInconsistency, "singular simplex basis");

  AffineFunctional h;
  h.normal.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) h.normal[i] = -lp.sign()[i] * (*yf)[i];
  h.offset = -lp.sign()[dim] * (*yf)[dim];

  double scale = std::abs(h.offset);
  for (double x : h.normal) scale = std::max(scale, std::abs(x));
  if (scale > 0.0) {
    for (double& x : h.normal) x /= scale;
    h.offset /= scale;
  }
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& v : problem.vertices) lowest = std::min(lowest, h(v));
  if (lowest < 0.0) h.offset -= lowest;
  if (h(problem.query) < 0.0) return Outside{std::move(h)};

  throw Error(ErrorCode::InternalInconsistency,
              "simplex produced neither a feasible point nor a separating functional");
}

bool is_inside(const MembershipResult& result) {
  return std::holds_alternative<Inside>(result);
}

bool verify_membership(const LpProblem& problem, const MembershipResult& result, double sum_tol,
                       double reconstruction_tol) {
  const std::size_t dim = problem.query.size();
  if (const auto* in = std::get_if<Inside>(&result)) {
    if (in->coefficients.size() != problem.vertices.size()) return false;
    double total = 0.0;
    for (double c : in->coefficients) {
      if (c < 0.0) return false;
      total += c;
    }
    if (std::abs(total - 1.0) > sum_tol) return false;
    for (std::size_t i = 0; i < dim; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < problem.vertices.size(); ++j) {
        acc += in->coefficients[j] * problem.vertices[j][i];
      }
      if (std::abs(acc - problem.query[i]) > reconstruction_tol) return false;
    }
    return true;
  }
  const auto& h = std::get<Outside>(result).separator;
  if (h.normal.size() != dim) return false;
  for (const auto& v : problem.vertices) {
    if (h(v) < -sum_tol) return false;
  }
  return h(problem.query) < 0.0;
}

}  // namespace slocc
