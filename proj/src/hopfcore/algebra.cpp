#include "hgs/algebra.hpp"

#include <stdexcept>

namespace hgs {

bool CheckReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string CheckReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return c.name + ": " + c.witness;
  return {};
}

void add_sparse(Vec& out, const Scalar& c, const SparseVec& v) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v) out[i] += c * x;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

Vec FinDimAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j)
      if (!y[j].is_zero()) add_sparse(out, x[i] * y[j], mult[i * dim + j]);
  }
  return out;
}

Matrix FinDimAlgebra::right_mult(std::size_t k) const {
  Matrix m(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (const auto& [r, x] : mult[i * dim + k]) m(r, i) = x;
  return m;
}

Matrix FinDimAlgebra::left_mult(std::size_t k) const {
  Matrix m(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (const auto& [r, x] : mult[k * dim + i]) m(r, i) = x;
  return m;
}

CheckReport check_algebra_axioms(const FinDimAlgebra& d) {
  CheckReport rep;
  const std::size_t n = d.dim;
  auto e = [&](std::size_t i) { return unit_vec(d.field, n, i); };
  CheckResult assoc{"associativity", true, ""};
  // (b_i b_j) b_k via right multiplication matrices
  std::vector<Matrix> right(n);
  for (std::size_t k = 0; k < n; ++k) right[k] = d.right_mult(k);
  for (std::size_t i = 0; i < n && assoc.pass; ++i)
    for (std::size_t j = 0; j < n && assoc.pass; ++j) {
      Vec bij = zero_vec(d.field, n);
      add_sparse(bij, d.field.one(), d.mult[i * n + j]);
      for (std::size_t k = 0; k < n && assoc.pass; ++k) {
        Vec lhs = right[k].apply(bij);
        Vec bjk = zero_vec(d.field, n);
        add_sparse(bjk, d.field.one(), d.mult[j * n + k]);
        Vec rhs = d.mul(e(i), bjk);
        if (lhs != rhs) {
          assoc.pass = false;
          assoc.witness = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
        }
      }
    }
  rep.checks.push_back(assoc);
  CheckResult unit{"unit", true, ""};
  for (std::size_t i = 0; i < n && unit.pass; ++i)
    if (d.mul(d.unit, e(i)) != e(i) || d.mul(e(i), d.unit) != e(i)) {
      unit.pass = false;
      unit.witness = std::to_string(i);
    }
  rep.checks.push_back(unit);
  return rep;
}

Matrix FDModule::rho(const Vec& x) const {
  Matrix m(field, dim, dim);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) m += act[k].scaled(x[k]);
  return m;
}

CheckReport check_module_axioms(const FinDimAlgebra& d, const FDModule& m) {
  CheckReport rep;
  CheckResult assoc{"module_associativity", true, ""};
  if (m.act.size() != d.dim) throw std::invalid_argument("module has the wrong number of action matrices");
  for (std::size_t i = 0; i < d.dim && assoc.pass; ++i)
    for (std::size_t j = 0; j < d.dim && assoc.pass; ++j) {
      Matrix lhs = m.act[j] * m.act[i];
      Matrix rhs(m.field, m.dim, m.dim);
      for (const auto& [k, c] : d.mult[i * d.dim + j]) rhs += m.act[k].scaled(c);
      if (lhs != rhs) {
        assoc.pass = false;
        assoc.witness = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  rep.checks.push_back(assoc);
  CheckResult unit{"module_unit", m.rho(d.unit) == Matrix::identity(m.field, m.dim), ""};
  if (!unit.pass) unit.witness = "unit acts non-trivially";
  rep.checks.push_back(unit);
  return rep;
}

FDModule regular_module(const FinDimAlgebra& d) {
  FDModule m{d.field, d.dim, {}};
  for (std::size_t k = 0; k < d.dim; ++k) m.act.push_back(d.right_mult(k));
  return m;
}

std::vector<Matrix> module_homs(const FDModule& m, const FDModule& n) {
  // X act^M_k = act^N_k X, unknown X_{pr} at index p*dim M + r
  const std::size_t dm = m.dim, dn = n.dim;
  if (m.act.size() != n.act.size()) throw std::invalid_argument("modules over different algebras");
  SparseMatrix sys(m.field, m.act.size() * dn * dm, dn * dm);
  std::size_t row = 0;
  for (std::size_t k = 0; k < m.act.size(); ++k) {
    const Matrix& a = m.act[k];
    const Matrix& b = n.act[k];
    for (std::size_t p = 0; p < dn; ++p)
      for (std::size_t q = 0; q < dm; ++q, ++row) {
        for (std::size_t r = 0; r < dm; ++r)
          if (!a(r, q).is_zero()) sys.add(row, p * dm + r, a(r, q));
        for (std::size_t r = 0; r < dn; ++r)
          if (!b(p, r).is_zero()) sys.add(row, r * dm + q, -b(p, r));
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : rank_nullspace(sys).nullspace) {
    Matrix x(m.field, dn, dm);
    for (std::size_t p = 0; p < dn; ++p)
      for (std::size_t r = 0; r < dm; ++r) x(p, r) = v[p * dm + r];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace hgs
