#include "slocc/tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "slocc/error.hpp"

namespace slocc {
namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void check_square(const ComplexMatrix& m, std::span<const std::size_t> dims, const char* what) {
  if (!m.is_square() || product(dims) != m.rows()) {
    throw Error(ErrorCode::DimMismatch, std::string(what) + ": factor dimensions do not match matrix");
  }
}

std::vector<std::size_t> digits(std::size_t index, std::span<const std::size_t> dims) {
  std::vector<std::size_t> d(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    d[k] = index % dims[k];
    index /= dims[k];
  }
  return d;
}

std::size_t compose(std::span<const std::size_t> d, std::span<const std::size_t> dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + d[k];
  return index;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b) {
  std::vector<Complex> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> kept) {
  check_square(m, dims, "partial_trace");
  std::vector<bool> keep(dims.size(), false);
  std::vector<std::size_t> kept_dims;
  for (std::size_t k : kept) {
    if (k >= dims.size() || keep[k]) {
      throw Error(ErrorCode::DimMismatch, "partial_trace: invalid kept subsystem");
    }
    keep[k] = true;
  }
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (keep[k]) kept_dims.push_back(dims[k]);
  }
  const std::size_t out_dim = product(kept_dims);
  ComplexMatrix out(out_dim, out_dim);
  const std::size_t n = m.rows();
  std::vector<std::size_t> kr, kc;
  for (std::size_t r = 0; r < n; ++r) {
    const auto dr = digits(r, dims);
    for (std::size_t c = 0; c < n; ++c) {
      const auto dc = digits(c, dims);
      bool diagonal_in_traced = true;
      kr.clear();
      kc.clear();
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (keep[k]) {
          kr.push_back(dr[k]);
          kc.push_back(dc[k]);
        } else if (dr[k] != dc[k]) {
          diagonal_in_traced = false;
          break;
        }
      }
      if (!diagonal_in_traced) continue;
      out(compose(kr, kept_dims), compose(kc, kept_dims)) += m(r, c);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                std::size_t subsystem) {
  check_square(m, dims, "partial_transpose");
  if (subsystem >= dims.size()) {
    throw Error(ErrorCode::DimMismatch, "partial_transpose: invalid subsystem");
  }
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    auto dr = digits(r, dims);
    for (std::size_t c = 0; c < n; ++c) {
      auto dc = digits(c, dims);
      std::swap(dr[subsystem], dc[subsystem]);
      out(compose(dr, dims), compose(dc, dims)) = m(r, c);
      std::swap(dr[subsystem], dc[subsystem]);
    }
  }
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                 std::span<const std::size_t> order) {
  check_square(m, dims, "permute_subsystems");
  if (order.size() != dims.size()) {
    throw Error(ErrorCode::DimMismatch, "permute_subsystems: order length");
  }
  std::vector<std::size_t> new_dims(dims.size());
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= dims.size() || seen[order[k]]) {
      throw Error(ErrorCode::DimMismatch, "permute_subsystems: order is not a permutation");
    }
    seen[order[k]] = true;
    new_dims[k] = dims[order[k]];
  }
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  std::vector<std::size_t> nr(dims.size()), nc(dims.size());
  for (std::size_t r = 0; r < n; ++r) {
    const auto dr = digits(r, dims);
    for (std::size_t k = 0; k < order.size(); ++k) nr[k] = dr[order[k]];
    const std::size_t new_r = compose(nr, new_dims);
    for (std::size_t c = 0; c < n; ++c) {
      const auto dc = digits(c, dims);
      for (std::size_t k = 0; k < order.size(); ++k) nc[k] = dc[order[k]];
      out(new_r, compose(nc, new_dims)) = m(r, c);
    }
  }
  return out;
}

}  // namespace slocc
