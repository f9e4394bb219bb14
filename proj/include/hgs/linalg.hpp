#pragma once

// Exact dense and sparse linear algebra over a Field.
//
// Every routine is deterministic: pivots are taken in ascending column
// order, so echelon bases, nullspace bases and quotient representatives do
// not depend on elimination order or thread count.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hgs/field.hpp"

namespace hgs {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
Vec unit_vec(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
/// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);

/// Row-major dense matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);

  Field field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix& operator+=(const Matrix& o);
  /// Kronecker product (this ⊗ o), row index = i*o.rows()+k.
  Matrix kron(const Matrix& o) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// Sparse matrix stored by rows; entries are sorted, unique and nonzero.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(Field f, std::size_t rows, std::size_t cols);
  static SparseMatrix from_dense(const Matrix& m);
  Matrix to_dense() const;

  Field field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  /// Accumulates v into entry (r, c); entries that cancel are dropped.
  void add(std::size_t r, std::size_t c, const Scalar& v);
  Scalar get(std::size_t r, std::size_t c) const;
  const SparseVec& row(std::size_t r) const { return rows_data_[r]; }
  Vec apply(const Vec& v) const;
  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;

 private:
  Field f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVec> rows_data_;
};

struct RankNullspace {
  std::size_t rank = 0;
  /// One vector per free column (ascending); entry 1 at its free column and
  /// 0 at the other free columns.
  std::vector<Vec> nullspace;
  std::vector<std::size_t> pivots;
};

/// Size above which elimination switches from dense to sparse storage.
inline constexpr std::size_t kDenseCutoff = 64;

RankNullspace rank_nullspace(const SparseMatrix& m);
RankNullspace rank_nullspace(const Matrix& m);
std::size_t rank(const SparseMatrix& m);
std::size_t rank(const Matrix& m);

/// Reduced row echelon form of the span of `rows` (zero rows dropped).
std::vector<Vec> rref_rows(Field f, std::size_t n, const std::vector<Vec>& rows,
                           std::vector<std::size_t>* pivots = nullptr);

/// Some x with m x = b: free variables set to 0 (the echelon
/// representative), or nullopt when the system is inconsistent.
std::optional<Vec> solve_or_membership(const SparseMatrix& m, const Vec& b);
std::optional<Vec> solve_or_membership(const Matrix& m, const Vec& b);

/// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

// --- subspaces of F^n, represented by canonical RREF bases -----------------

class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient, const std::vector<Vec>& spanning);
  static Subspace whole(Field f, std::size_t n);

  Field field() const { return f_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const& { return basis_; }
  std::vector<Vec> basis() && { return std::move(basis_); }
  const std::vector<std::size_t>& pivots() const& { return pivots_; }
  std::vector<std::size_t> pivots() && { return std::move(pivots_); }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Field f_;
  std::size_t n_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersection(const Subspace& u, const Subspace& w);
/// Standard basis vectors e_j for the non-pivot columns j of u: a set of
/// representatives for F^n / u.
std::vector<std::size_t> quotient_representatives(const Subspace& u);

/// Linear projection F^n -> F^n/u in the coordinates of
/// quotient_representatives(u): a (n - dim u) x n matrix.
Matrix quotient_projection(const Subspace& u);

/// Kernel of a matrix as a Subspace.
Subspace kernel(const Matrix& m);
Subspace kernel(const SparseMatrix& m);
Subspace image(const Matrix& m);

}  // namespace hgs
