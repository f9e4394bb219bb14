#include "hgs/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hgs/kernels.hpp"

namespace hgs {

// ---------------------------------------------------------------- vectors

Vec zero_vec(Field f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x *= c;
  return out;
}

void axpy(Vec& a, const Scalar& c, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vec out = zero_vec(f_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator*(const Matrix& o) const { return kernels::matmul_parallel(*this, o); }

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  r += o;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.data_)
    if (!x.is_zero()) x *= c;
  return r;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix r(f_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l)
          if (!o(k, l).is_zero()) r(i * o.rows_ + k, j * o.cols_ + l) = a * o(k, l);
    }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- SparseMatrix

namespace {

// a + c*b on sorted sparse vectors
SparseVec sparse_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Scalar v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseMatrix::SparseMatrix(Field f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), rows_data_(rows) {}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) s.rows_data_[r].emplace_back(c, m(r, c));
  return s;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(f_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : rows_data_[r]) m(r, c) = v;
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_data_) n += r.size();
  return n;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::add: index out of range");
  if (v.is_zero()) return;
  auto& row = rows_data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const std::pair<std::size_t, Scalar>& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

Scalar SparseMatrix::get(std::size_t r, std::size_t c) const {
  const auto& row = rows_data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const std::pair<std::size_t, Scalar>& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return f_.zero();
}

Vec SparseMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vec out = zero_vec(f_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, x] : rows_data_[r])
      if (!v[c].is_zero()) out[r] += x * v[c];
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(f_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, x] : rows_data_[r]) t.rows_data_[c].emplace_back(r, x);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("sparse product: dimension mismatch");
  SparseMatrix out(f_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseVec acc;
    for (const auto& [k, x] : rows_data_[r]) acc = sparse_axpy(acc, x, o.rows_data_[k]);
    out.rows_data_[r] = std::move(acc);
  }
  return out;
}

// ---------------------------------------------------------------- elimination

namespace {

struct SparseEchelon {
  std::vector<SparseVec> rows;              // normalized, leading entry 1
  std::vector<std::ptrdiff_t> pivot_row;    // column -> index into rows, or -1
};

// Online echelon insertion. Rows are fed sparsest first (Markowitz-style
// choice); the resulting pivot set is the row space's set of leading
// columns, hence independent of the feeding order.
SparseEchelon sparse_echelon(const SparseMatrix& m) {
  SparseEchelon e;
  e.pivot_row.assign(m.cols(), -1);
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });
  for (std::size_t idx : order) {
    SparseVec v = m.row(idx);
    while (!v.empty()) {
      auto lead = v.front().first;
      auto pr = e.pivot_row[lead];
      if (pr < 0) break;
      Scalar c = -v.front().second;
      v = sparse_axpy(v, c, e.rows[static_cast<std::size_t>(pr)]);
    }
    if (v.empty()) continue;
    Scalar inv = v.front().second.inverse();
    for (auto& [c, x] : v) x *= inv;
    e.pivot_row[v.front().first] = static_cast<std::ptrdiff_t>(e.rows.size());
    e.rows.push_back(std::move(v));
  }
  return e;
}

// Full back-substitution: returns RREF rows in ascending pivot order.
std::vector<SparseVec> sparse_rref(SparseEchelon e, std::vector<std::size_t>& pivots) {
  pivots.clear();
  for (std::size_t c = 0; c < e.pivot_row.size(); ++c)
    if (e.pivot_row[c] >= 0) pivots.push_back(c);
  for (std::size_t k = pivots.size(); k-- > 0;) {
    auto& row = e.rows[static_cast<std::size_t>(e.pivot_row[pivots[k]])];
    // collect the other pivot columns present in this row before touching it
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [c, x] : row)
      if (c != pivots[k] && e.pivot_row[c] >= 0) hits.emplace_back(c, x);
    for (const auto& [c, x] : hits)
      row = sparse_axpy(row, -x, e.rows[static_cast<std::size_t>(e.pivot_row[c])]);
  }
  std::vector<SparseVec> out;
  out.reserve(pivots.size());
  for (auto c : pivots) out.push_back(std::move(e.rows[static_cast<std::size_t>(e.pivot_row[c])]));
  return out;
}

bool use_dense(std::size_t rows, std::size_t cols) { return rows <= kDenseCutoff && cols <= kDenseCutoff; }

RankNullspace nullspace_from_rref(Field f, std::size_t ncols, const std::vector<SparseVec>& rref,
                                  const std::vector<std::size_t>& pivots) {
  RankNullspace out;
  out.rank = pivots.size();
  out.pivots = pivots;
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_index(ncols, 0);
  std::vector<std::size_t> frees;
  for (std::size_t c = 0; c < ncols; ++c)
    if (!is_pivot[c]) {
      free_index[c] = frees.size();
      frees.push_back(c);
    }
  out.nullspace.assign(frees.size(), zero_vec(f, ncols));
  for (std::size_t k = 0; k < frees.size(); ++k) out.nullspace[k][frees[k]] = f.one();
  for (std::size_t i = 0; i < rref.size(); ++i)
    for (const auto& [c, x] : rref[i])
      if (!is_pivot[c]) out.nullspace[free_index[c]][pivots[i]] = -x;
  return out;
}

std::vector<SparseVec> dense_rref_rows(const Matrix& m, std::vector<std::size_t>& pivots) {
  Matrix work = m;
  pivots = kernels::rref_parallel(work);
  std::vector<SparseVec> rows;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    SparseVec v;
    for (std::size_t c = 0; c < work.cols(); ++c)
      if (!work(i, c).is_zero()) v.emplace_back(c, work(i, c));
    rows.push_back(std::move(v));
  }
  return rows;
}

std::vector<SparseVec> any_rref(const SparseMatrix& m, std::vector<std::size_t>& pivots) {
  if (use_dense(m.rows(), m.cols())) return dense_rref_rows(m.to_dense(), pivots);
  return sparse_rref(sparse_echelon(m), pivots);
}

}  // namespace

RankNullspace rank_nullspace(const SparseMatrix& m) {
  std::vector<std::size_t> pivots;
  auto rows = any_rref(m, pivots);
  return nullspace_from_rref(m.field(), m.cols(), rows, pivots);
}

RankNullspace rank_nullspace(const Matrix& m) {
  std::vector<std::size_t> pivots;
  if (use_dense(m.rows(), m.cols())) {
    auto rows = dense_rref_rows(m, pivots);
    return nullspace_from_rref(m.field(), m.cols(), rows, pivots);
  }
  return rank_nullspace(SparseMatrix::from_dense(m));
}

std::size_t rank(const SparseMatrix& m) {
  if (use_dense(m.rows(), m.cols())) {
    Matrix d = m.to_dense();
    return kernels::rref_parallel(d).size();
  }
  return sparse_echelon(m).rows.size();
}

std::size_t rank(const Matrix& m) {
  if (use_dense(m.rows(), m.cols())) {
    Matrix d = m;
    return kernels::rref_parallel(d).size();
  }
  return sparse_echelon(SparseMatrix::from_dense(m)).rows.size();
}

std::vector<Vec> rref_rows(Field f, std::size_t n, const std::vector<Vec>& rows, std::vector<std::size_t>* pivots) {
  SparseMatrix m(f, rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) throw std::invalid_argument("rref_rows: length mismatch");
    for (std::size_t c = 0; c < n; ++c)
      if (!rows[r][c].is_zero()) m.add(r, c, rows[r][c]);
  }
  std::vector<std::size_t> piv;
  auto sparse = any_rref(m, piv);
  std::vector<Vec> out;
  for (const auto& sv : sparse) {
    Vec v = zero_vec(f, n);
    for (const auto& [c, x] : sv) v[c] = x;
    out.push_back(std::move(v));
  }
  if (pivots) *pivots = piv;
  return out;
}

std::optional<Vec> solve_or_membership(const SparseMatrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  SparseMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, x] : m.row(r)) aug.add(r, c, x);
    aug.add(r, m.cols(), b[r]);
  }
  std::vector<std::size_t> pivots;
  auto rows = any_rref(aug, pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i])
      if (c == m.cols()) x[pivots[i]] = v;
  return x;
}

std::optional<Vec> solve_or_membership(const Matrix& m, const Vec& b) {
  return solve_or_membership(SparseMatrix::from_dense(m), b);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto pivots = kernels::rref_parallel(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field f, std::size_t ambient, const std::vector<Vec>& spanning) : f_(f), n_(ambient) {
  basis_ = rref_rows(f, ambient, spanning, &pivots_);
}

Subspace Subspace::whole(Field f, std::size_t n) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vec(f, n, i));
  return Subspace(f, n, basis);
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != n_) throw std::invalid_argument("Subspace::contains: length mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, basis_[i]);
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& o) const {
  return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  std::vector<Vec> all = u.basis();
  all.insert(all.end(), w.basis().begin(), w.basis().end());
  return Subspace(u.field(), u.ambient(), all);
}

Subspace subspace_intersection(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw std::invalid_argument("intersection: ambient mismatch");
  Field f = u.field();
  const std::size_t n = u.ambient(), k = u.dim(), l = w.dim();
  if (k == 0 || l == 0) return Subspace(f, n, {});
  SparseMatrix m(f, n, k + l);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < n; ++r) m.add(r, i, u.basis()[i][r]);
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t r = 0; r < n; ++r) m.add(r, k + j, -w.basis()[j][r]);
  auto rn = rank_nullspace(m);
  std::vector<Vec> vecs;
  for (const auto& z : rn.nullspace) {
    Vec x = zero_vec(f, n);
    for (std::size_t i = 0; i < k; ++i) axpy(x, z[i], u.basis()[i]);
    vecs.push_back(std::move(x));
  }
  return Subspace(f, n, vecs);
}

std::vector<std::size_t> quotient_representatives(const Subspace& u) {
  std::vector<bool> piv(u.ambient(), false);
  for (auto p : u.pivots()) piv[p] = true;
  std::vector<std::size_t> reps;
  for (std::size_t c = 0; c < u.ambient(); ++c)
    if (!piv[c]) reps.push_back(c);
  return reps;
}

Matrix quotient_projection(const Subspace& u) {
  auto reps = quotient_representatives(u);
  const std::size_t n = u.ambient();
  std::vector<std::ptrdiff_t> rep_index(n, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<std::ptrdiff_t>(i);
  Matrix p(u.field(), reps.size(), n);
  for (std::size_t i = 0; i < reps.size(); ++i) p(i, reps[i]) = u.field().one();
  for (std::size_t b = 0; b < u.dim(); ++b) {
    const auto pc = u.pivots()[b];
    for (std::size_t c = 0; c < n; ++c)
      if (rep_index[c] >= 0 && !u.basis()[b][c].is_zero())
        p(static_cast<std::size_t>(rep_index[c]), pc) = -u.basis()[b][c];
  }
  return p;
}

Subspace kernel(const Matrix& m) { return Subspace(m.field(), m.cols(), rank_nullspace(m).nullspace); }

Subspace kernel(const SparseMatrix& m) { return Subspace(m.field(), m.cols(), rank_nullspace(m).nullspace); }

Subspace image(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  return Subspace(m.field(), m.rows(), cols);
}

}  // namespace hgs
