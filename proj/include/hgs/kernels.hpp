#pragma once

// Dense elimination and product kernels. Each kernel has a serial reference
// version and an OpenMP version that must produce identical results; the
// rest of the library calls the parallel one.

#include <vector>

#include "hgs/linalg.hpp"

namespace hgs::kernels {

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref_serial(Matrix& m);
std::vector<std::size_t> rref_parallel(Matrix& m);

Matrix matmul_serial(const Matrix& a, const Matrix& b);
Matrix matmul_parallel(const Matrix& a, const Matrix& b);

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

}  // namespace hgs::kernels
