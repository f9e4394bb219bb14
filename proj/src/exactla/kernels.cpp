#include "hgs/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hgs::kernels {

namespace {

// Shared pivot search: first row at or below `r` with a nonzero in column c.
std::ptrdiff_t find_pivot(const Matrix& m, std::size_t r, std::size_t c) {
  for (std::size_t i = r; i < m.rows(); ++i)
    if (!m(i, c).is_zero()) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void normalize_row(Matrix& m, std::size_t r, std::size_t c) {
  Scalar inv = m(r, c).inverse();
  for (std::size_t j = c; j < m.cols(); ++j)
    if (!m(r, j).is_zero()) m(r, j) *= inv;
}

void eliminate_row(Matrix& m, std::size_t target, std::size_t pivot_row, std::size_t c) {
  if (m(target, c).is_zero()) return;
  Scalar factor = m(target, c);
  for (std::size_t j = c; j < m.cols(); ++j) {
    const Scalar& pv = m(pivot_row, j);
    if (!pv.is_zero()) m(target, j) -= factor * pv;
  }
}

}  // namespace

std::vector<std::size_t> rref_serial(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    auto p = find_pivot(m, r, c);
    if (p < 0) continue;
    swap_rows(m, r, static_cast<std::size_t>(p));
    normalize_row(m, r, c);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r) eliminate_row(m, i, r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> rref_parallel(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    auto p = find_pivot(m, r, c);
    if (p < 0) continue;
    swap_rows(m, r, static_cast<std::size_t>(p));
    normalize_row(m, r, c);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i)
      if (static_cast<std::size_t>(i) != r) eliminate_row(m, static_cast<std::size_t>(i), r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix matmul_parallel(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
  Matrix out(a.field(), a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace hgs::kernels
