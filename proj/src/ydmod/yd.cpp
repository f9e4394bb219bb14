#include "hgs/yd.hpp"

#include <algorithm>
#include <random>

namespace hgs {

namespace {

Matrix kron_id_left(const Matrix& m, std::size_t d) { return Matrix::identity(m.field(), d).kron(m); }

// Coordinates of a vector of a subspace in its RREF basis.
Vec coords(const Subspace& s, const Vec& v) {
  Vec out;
  out.reserve(s.dim());
  for (auto p : s.pivots()) out.push_back(v[p]);
  return out;
}

// Delta^2(a_k) as (s, t, u, coefficient).
struct Triple {
  std::size_t s, t, u;
  Scalar c;
};
std::vector<Triple> delta2(const FinDimHopf& a, std::size_t k) {
  const std::size_t n = a.dim;
  Vec acc = zero_vec(a.field, n * n * n);
  for (const auto& [wu, c] : a.comult[k]) {
    std::size_t w = wu / n, u = wu % n;
    for (const auto& [st, d] : a.comult[w]) acc[st * n + u] += c * d;
  }
  std::vector<Triple> out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (!acc[i].is_zero()) out.push_back({i / (n * n), (i / n) % n, i % n, acc[i]});
  return out;
}

Scalar random_scalar(Field f, std::mt19937_64& rng) {
  if (f.is_finite()) return f.from_code(rng() % f.order());
  Scalar s = f.from_int(static_cast<long>(rng() % 11) - 5);
  if (f.degree() > 1) s += f.generator() * f.from_int(static_cast<long>(rng() % 5) - 2);
  return s;
}

Matrix one_by_one(Field f, const Scalar& x) {
  Matrix m(f, 1, 1);
  m(0, 0) = x;
  return m;
}

}  // namespace

Matrix YDModule::action(const Vec& a) const {
  Matrix m(field(), dim, dim);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero()) m += act[k].scaled(a[k]);
  return m;
}

CheckReport yd_check(const YDModule& v) {
  const FinDimHopf& a = *v.base;
  const std::size_t n = a.dim;
  const Field f = a.field;
  CheckReport rep;
  if (v.act.size() != n || v.co.size() != n) throw YDError("YD module has the wrong number of structure matrices");

  CheckResult mod{"module", v.action(a.unit) == Matrix::identity(f, v.dim), ""};
  if (!mod.pass) mod.witness = "unit acts non-trivially";
  for (std::size_t i = 0; i < n && mod.pass; ++i)
    for (std::size_t j = 0; j < n && mod.pass; ++j) {
      Matrix rhs(f, v.dim, v.dim);
      for (const auto& [k, c] : a.mult[i * n + j]) rhs += v.act[k].scaled(c);
      if (v.act[j] * v.act[i] != rhs) {
        mod.pass = false;
        mod.witness = "(" + a.label(i) + ", " + a.label(j) + ")";
      }
    }
  rep.checks.push_back(mod);

  CheckResult comod{"comodule", true, ""};
  {
    Matrix s(f, v.dim, v.dim);
    for (std::size_t j = 0; j < n; ++j)
      if (!a.counit[j].is_zero()) s += v.co[j].scaled(a.counit[j]);
    comod.pass = s == Matrix::identity(f, v.dim);
    if (!comod.pass) comod.witness = "counit";
  }
  if (comod.pass) {
    // co[l] co[j] = sum_k c^k_{lj} co[k]
    std::vector<Matrix> rhs(n * n, Matrix(f, v.dim, v.dim));
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [lj, c] : a.comult[k]) rhs[lj] += v.co[k].scaled(c);
    for (std::size_t l = 0; l < n && comod.pass; ++l)
      for (std::size_t j = 0; j < n && comod.pass; ++j)
        if (v.co[l] * v.co[j] != rhs[l * n + j]) {
          comod.pass = false;
          comod.witness = "(" + a.label(l) + ", " + a.label(j) + ")";
        }
  }
  rep.checks.push_back(comod);

  CheckResult ydc{"yd_condition", true, ""};
  auto x = straightening(a);
  for (std::size_t j = 0; j < n && ydc.pass; ++j)
    for (std::size_t m = 0; m < n && ydc.pass; ++m) {
      Matrix rhs(f, v.dim, v.dim);
      for (const auto& [rt, c] : x[j * n + m]) rhs += (v.act[rt % n] * v.co[rt / n]).scaled(c);
      if (v.co[m] * v.act[j] != rhs) {
        ydc.pass = false;
        ydc.witness = "a=" + a.label(j) + ", component " + a.label(m);
      }
    }
  rep.checks.push_back(ydc);
  return rep;
}

YDModule trivial_yd(HopfPtr a) {
  Character eps{a, a->counit};
  return k_psi(eps);
}

YDModule direct_sum(const YDModule& v, const YDModule& w) {
  if (v.base != w.base) throw YDError("direct sum of modules over different bases");
  YDModule out{v.base, v.dim + w.dim, {}, {}};
  auto block = [&](const Matrix& x, const Matrix& y) {
    Matrix m(v.field(), out.dim, out.dim);
    for (std::size_t r = 0; r < v.dim; ++r)
      for (std::size_t c = 0; c < v.dim; ++c) m(r, c) = x(r, c);
    for (std::size_t r = 0; r < w.dim; ++r)
      for (std::size_t c = 0; c < w.dim; ++c) m(v.dim + r, v.dim + c) = y(r, c);
    return m;
  };
  for (std::size_t j = 0; j < v.act.size(); ++j) {
    out.act.push_back(block(v.act[j], w.act[j]));
    out.co.push_back(block(v.co[j], w.co[j]));
  }
  return out;
}

CheckReport character_check(const Character& psi) {
  const FinDimHopf& a = *psi.base;
  const std::size_t n = a.dim;
  CheckReport rep;
  auto value = [&](const Vec& x) {
    Scalar s = a.field.zero();
    for (std::size_t k = 0; k < n; ++k)
      if (!x[k].is_zero()) s += x[k] * psi.values[k];
    return s;
  };
  CheckResult alg{"algebra_map", value(a.unit).is_one(), ""};
  if (!alg.pass) alg.witness = "psi(1) != 1";
  for (std::size_t i = 0; i < n && alg.pass; ++i)
    for (std::size_t j = 0; j < n && alg.pass; ++j) {
      Vec ij = zero_vec(a.field, n);
      add_sparse(ij, a.field.one(), a.mult[i * n + j]);
      if (value(ij) != psi.values[i] * psi.values[j]) {
        alg.pass = false;
        alg.witness = "(" + a.label(i) + ", " + a.label(j) + ")";
      }
    }
  rep.checks.push_back(alg);
  CheckResult central{"central_type", true, ""};
  for (std::size_t k = 0; k < n && central.pass; ++k) {
    Vec lhs = zero_vec(a.field, n), rhs = zero_vec(a.field, n);
    for (const auto& [st, c] : a.comult[k]) {
      lhs[st % n] += c * psi.values[st / n];
      rhs[st / n] += c * psi.values[st % n];
    }
    if (lhs != rhs) {
      central.pass = false;
      central.witness = a.label(k);
    }
  }
  rep.checks.push_back(central);
  return rep;
}

YDModule k_psi(const Character& psi) {
  auto rep = character_check(psi);
  if (!rep.all_pass()) throw YDError("not a central-type character: " + rep.first_failure());
  const FinDimHopf& a = *psi.base;
  YDModule v{psi.base, 1, {}, {}};
  for (std::size_t j = 0; j < a.dim; ++j) {
    v.act.push_back(one_by_one(a.field, psi.values[j]));
    v.co.push_back(one_by_one(a.field, a.unit[j]));
  }
  return v;
}

Character character_product(const Character& psi, const Character& phi) {
  const FinDimHopf& a = *psi.base;
  Character out{psi.base, zero_vec(a.field, a.dim)};
  for (std::size_t k = 0; k < a.dim; ++k)
    for (const auto& [st, c] : a.comult[k]) out.values[k] += c * psi.values[st / a.dim] * phi.values[st % a.dim];
  return out;
}

YDModule coadjoint(HopfPtr ap, const Matrix& p) {
  const FinDimHopf& a = *ap;
  const std::size_t n = a.dim, nl = p.rows();
  if (p.cols() != n) throw YDError("projection does not start at the base algebra");
  if (rank(p) != nl) throw YDError("projection is not surjective");
  // structure on A before projecting: right multiplication and a -> a_2 (x) S(a_1) a_3
  std::vector<Matrix> act_a(n, Matrix(a.field, nl, n)), co_a(n, Matrix(a.field, nl, n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [r, c] : a.mult[k * n + j])
        for (std::size_t l = 0; l < nl; ++l)
          if (!p(l, r).is_zero()) act_a[j](l, k) += c * p(l, r);
    for (const auto& tr : delta2(a, k)) {
      Vec sau = a.mul(a.antipode.col(tr.s), a.basis(tr.u));
      for (std::size_t m = 0; m < n; ++m) {
        if (sau[m].is_zero()) continue;
        for (std::size_t l = 0; l < nl; ++l)
          if (!p(l, tr.t).is_zero()) co_a[m](l, k) += tr.c * sau[m] * p(l, tr.t);
      }
    }
  }
  Subspace ker = kernel(p);
  for (const auto& x : ker.basis())
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(act_a[j].apply(x)) || !is_zero(co_a[j].apply(x)))
        throw YDError("coadjoint structure does not descend along the projection");
  YDModule v{ap, nl, {}, {}};
  std::vector<Vec> lifts;
  for (std::size_t r = 0; r < nl; ++r) {
    auto s = solve_or_membership(p, unit_vec(a.field, nl, r));
    lifts.push_back(*s);
  }
  Matrix lift = Matrix::from_columns(a.field, n, lifts);
  for (std::size_t j = 0; j < n; ++j) {
    v.act.push_back(act_a[j] * lift);
    v.co.push_back(co_a[j] * lift);
  }
  return v;
}

YDModule coadjoint_quotient(const HopfMorphism& i) {
  return coadjoint(i.target, quotient_by_subalgebra(i).proj);
}

YDModule tensor_yd(const YDModule& v, const YDModule& w) {
  if (v.base != w.base) throw YDError("tensor product of modules over different bases");
  const FinDimHopf& a = *v.base;
  const std::size_t n = a.dim;
  YDModule out{v.base, v.dim * w.dim, {}, {}};
  for (std::size_t j = 0; j < n; ++j) {
    Matrix m(a.field, out.dim, out.dim);
    for (const auto& [st, c] : a.comult[j]) m += v.act[st / n].kron(w.act[st % n]).scaled(c);
    out.act.push_back(std::move(m));
  }
  std::vector<Matrix> co(n, Matrix(a.field, out.dim, out.dim));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t q = 0; q < n; ++q) {
      const auto& prod = a.mult[r * n + q];
      if (prod.empty()) continue;
      Matrix k = v.co[r].kron(w.co[q]);
      if (k.is_zero()) continue;
      for (const auto& [l, c] : prod) co[l] += k.scaled(c);
    }
  out.co = std::move(co);
  return out;
}

YDModule dual_yd(const YDModule& v) {
  const FinDimHopf& a = *v.base;
  const std::size_t n = a.dim;
  auto sinv = inverse(a.antipode);
  if (!sinv) throw YDError("antipode is singular");
  YDModule out{v.base, v.dim, {}, {}};
  for (std::size_t j = 0; j < n; ++j) out.act.push_back(v.action(sinv->col(j)).transpose());
  for (std::size_t l = 0; l < n; ++l) {
    Matrix m(a.field, v.dim, v.dim);
    for (std::size_t r = 0; r < n; ++r)
      if (!a.antipode(l, r).is_zero()) m += v.co[r].transpose().scaled(a.antipode(l, r));
    out.co.push_back(std::move(m));
  }
  return out;
}

Matrix evaluation_map(const YDModule& v) {
  Matrix m(v.field(), 1, v.dim * v.dim);
  for (std::size_t i = 0; i < v.dim; ++i) m(0, i * v.dim + i) = v.field().one();
  return m;
}

Matrix coevaluation_map(const YDModule& v) { return evaluation_map(v).transpose(); }

Restriction restrict_to(const YDModule& x, const HopfMorphism& i) {
  const FinDimHopf& a = *i.target;
  const FinDimHopf& b = *i.source;
  if (x.base != i.target) throw YDError("restriction along an inclusion into a different algebra");
  const std::size_t n = a.dim, nb = b.dim, d = x.dim;
  const Field f = a.field;

  Subspace im = image(i.map);
  Matrix pi = quotient_projection(im);
  Matrix stacked(f, pi.rows() * d, d);
  for (std::size_t q = 0; q < pi.rows(); ++q) {
    Matrix m(f, d, d);
    for (std::size_t j = 0; j < n; ++j)
      if (!pi(q, j).is_zero()) m += x.co[j].scaled(pi(q, j));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked(q * d + r, c) = m(r, c);
  }
  Restriction res;
  res.subspace = kernel(stacked);
  const auto& basis = res.subspace.basis();
  const std::size_t e = basis.size();

  // left inverse of i: invert a full-rank square block of rows
  auto rn = rank_nullspace(i.map.transpose());
  Matrix block(f, nb, nb);
  for (std::size_t r = 0; r < nb; ++r)
    for (std::size_t c = 0; c < nb; ++c) block(r, c) = i.map(rn.pivots[r], c);
  Matrix binv = *inverse(block);
  Matrix linv(f, nb, n);
  for (std::size_t r = 0; r < nb; ++r)
    for (std::size_t c = 0; c < nb; ++c) linv(r, rn.pivots[c]) = binv(r, c);

  YDModule out{i.source, e, {}, {}};
  auto restricted = [&](const Matrix& m, const char* what) {
    Matrix r(f, e, e);
    for (std::size_t c = 0; c < e; ++c) {
      Vec y = m.apply(basis[c]);
      if (!res.subspace.contains(y)) throw YDError(std::string("X^(B) is not stable under the ") + what);
      Vec yc = coords(res.subspace, y);
      for (std::size_t row = 0; row < e; ++row) r(row, c) = yc[row];
    }
    return r;
  };
  for (std::size_t k = 0; k < nb; ++k) out.act.push_back(restricted(x.action(i.map.col(k)), "B-action"));
  for (std::size_t k = 0; k < nb; ++k) {
    Matrix m(f, d, d);
    for (std::size_t j = 0; j < n; ++j)
      if (!linv(k, j).is_zero()) m += x.co[j].scaled(linv(k, j));
    out.co.push_back(restricted(m, "B-coaction"));
  }
  res.module = std::move(out);

  // cotensor product: kernel of rho (x) id - id (x) (i (x) id)Delta_B on X (x) B
  SparseMatrix phi(f, d * n * nb, d * nb);
  for (std::size_t v = 0; v < d; ++v)
    for (std::size_t k = 0; k < nb; ++k) {
      std::size_t col = v * nb + k;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t y = 0; y < d; ++y)
          if (!x.co[j](y, v).is_zero()) phi.add((y * n + j) * nb + k, col, x.co[j](y, v));
      for (const auto& [st, c] : b.comult[k]) {
        std::size_t s = st / nb, t = st % nb;
        for (std::size_t r = 0; r < n; ++r)
          if (!i.map(r, s).is_zero()) phi.add((v * n + r) * nb + t, col, -c * i.map(r, s));
      }
    }
  std::vector<Vec> proj;
  for (const auto& z : rank_nullspace(phi).nullspace) {
    Vec w = zero_vec(f, d);
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t k = 0; k < nb; ++k)
        if (!z[v * nb + k].is_zero()) w[v] += z[v * nb + k] * b.counit[k];
    proj.push_back(std::move(w));
  }
  res.cotensor = Subspace(f, d, proj);
  return res;
}

YDModule induce(const YDModule& v, const HopfMorphism& i) {
  const FinDimHopf& a = *i.target;
  const FinDimHopf& b = *i.source;
  if (v.base != i.source) throw YDError("induction of a module over a different algebra");
  const std::size_t n = a.dim, nb = b.dim, d = v.dim, big = d * n;
  const Field f = a.field;

  std::vector<Vec> rels;
  for (std::size_t e = 0; e < d; ++e)
    for (std::size_t k = 0; k < nb; ++k) {
      Vec ib = i.map.col(k);
      for (std::size_t m = 0; m < n; ++m) {
        Vec r = zero_vec(f, big);
        for (std::size_t w = 0; w < d; ++w) r[w * n + m] += v.act[k](w, e);
        Vec ibm = a.mul(ib, a.basis(m));
        for (std::size_t s = 0; s < n; ++s) r[e * n + s] -= ibm[s];
        rels.push_back(std::move(r));
      }
    }
  Subspace rel(f, big, rels);
  Matrix proj = quotient_projection(rel);
  auto reps = quotient_representatives(rel);
  std::vector<Vec> lift_cols;
  for (auto r : reps) lift_cols.push_back(unit_vec(f, big, r));
  Matrix lift = Matrix::from_columns(f, big, lift_cols);

  std::vector<Matrix> act_big, co_big(n, Matrix(f, big, big));
  for (std::size_t j = 0; j < n; ++j) act_big.push_back(kron_id_left(a.algebra().right_mult(j), d));
  for (std::size_t m = 0; m < n; ++m)
    for (const auto& tr : delta2(a, m)) {
      Vec sa = a.antipode.col(tr.s);
      for (std::size_t k = 0; k < nb; ++k) {
        if (v.co[k].is_zero()) continue;
        Vec w = a.mul(a.mul(sa, i.map.col(k)), a.basis(tr.u));
        for (std::size_t l = 0; l < n; ++l) {
          if (w[l].is_zero()) continue;
          Scalar c = tr.c * w[l];
          for (std::size_t e = 0; e < d; ++e)
            for (std::size_t y = 0; y < d; ++y)
              if (!v.co[k](y, e).is_zero()) co_big[l](y * n + tr.t, e * n + m) += c * v.co[k](y, e);
        }
      }
    }
  for (const auto& x : rel.basis())
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(proj.apply(act_big[j].apply(x))) || !is_zero(proj.apply(co_big[j].apply(x))))
        throw YDError("induced structure does not descend to the tensor product over B");
  YDModule out{i.target, reps.size(), {}, {}};
  for (std::size_t j = 0; j < n; ++j) {
    out.act.push_back(proj * act_big[j] * lift);
    out.co.push_back(proj * co_big[j] * lift);
  }
  return out;
}

std::vector<Subspace> grading_components(const HopfMorphism& p) {
  const FinDimHopf& a = *p.source;
  const FinDimHopf& l = *p.target;
  if (!l.group) throw YDError("grading needs a map onto a group algebra");
  const Group& g = *l.group;
  const std::size_t n = a.dim, nl = l.dim;
  const Field f = a.field;
  std::vector<Subspace> comps;
  std::size_t total = 0;
  for (std::size_t x = 0; x < nl; ++x) {
    SparseMatrix phi(f, n * nl, n);
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& [st, c] : a.comult[k])
        for (std::size_t y = 0; y < nl; ++y)
          if (!p.map(y, st % n).is_zero()) phi.add((st / n) * nl + y, k, c * p.map(y, st % n));
      phi.add(k * nl + x, k, -f.one());
    }
    comps.push_back(kernel(phi));
    total += comps.back().dim();
  }
  std::vector<Vec> all;
  for (const auto& c : comps) all.insert(all.end(), c.basis().begin(), c.basis().end());
  if (total != n || Subspace(f, n, all).dim() != n) throw YDError("components do not form a direct sum decomposition");
  for (std::size_t x = 0; x < nl; ++x) {
    for (const auto& u : comps[x].basis()) {
      Vec pu = p.map.apply(u);
      if (pu != scale(a.eps(u), l.basis(x))) throw YDError("p(a) != eps(a) g on a component");
      for (std::size_t y = 0; y < nl; ++y)
        for (const auto& w : comps[y].basis())
          if (!comps[g.mul(x, y)].contains(a.mul(u, w))) throw YDError("components are not multiplicative");
    }
  }
  return comps;
}

std::vector<Character> group_characters(HopfPtr kg) {
  if (!kg->group) throw YDError("characters are enumerated for group algebras only");
  const Group& g = *kg->group;
  const Field f = kg->field;
  auto gens = g.generators();
  auto roots = nth_roots_of_unity(f, g.exponent());
  std::vector<Character> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    std::vector<Scalar> val(g.order());
    std::vector<bool> set(g.order(), false);
    val[g.identity()] = f.one();
    set[g.identity()] = true;
    std::vector<std::size_t> queue{g.identity()};
    bool ok = true;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      std::size_t x = queue[qi];
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        std::size_t y = g.mul(x, gens[k]);
        Scalar v = val[x] * roots[choice[k]];
        if (!set[y]) {
          val[y] = v;
          set[y] = true;
          queue.push_back(y);
        } else if (val[y] != v) {
          ok = false;
        }
      }
    }
    if (ok) out.push_back({kg, val});
    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == roots.size()) choice[k++] = 0;
    if (k == gens.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const Character& x, const Character& y) {
    return std::lexicographical_compare(x.values.begin(), x.values.end(), y.values.begin(), y.values.end(),
                                        [](const Scalar& s, const Scalar& t) {
                                          // 1 sorts first, so the trivial character leads
                                          if (s.is_one() != t.is_one()) return s.is_one();
                                          return canonical_less(s, t);
                                        });
  });
  return out;
}

FourierTransform fourier_transform(const HopfMorphism& p) {
  const FinDimHopf& l = *p.target;
  const FinDimHopf& a = *p.source;
  if (!l.group) throw YDError("Fourier transform needs a map onto a group algebra");
  const Group& g = *l.group;
  if (!g.is_abelian()) throw FourierError(FourierError::Kind::not_abelian, "group is not abelian");
  if (a.field.from_int(static_cast<long>(g.order())).is_zero())
    throw FourierError(FourierError::Kind::order_zero, "|Γ| = 0 in k");
  if (!cocentral_check(p).pass) throw FourierError(FourierError::Kind::not_cocentral, "p is not cocentral");
  auto chars = group_characters(p.target);
  if (chars.size() < g.order()) throw FourierError(FourierError::Kind::missing_roots, "insufficient roots of unity");

  FourierTransform ft;
  ft.matrix = Matrix(a.field, chars.size(), g.order());
  for (std::size_t c = 0; c < chars.size(); ++c)
    for (std::size_t x = 0; x < g.order(); ++x) ft.matrix(c, x) = chars[c].values[x];
  ft.source = coadjoint(p.source, p.map);
  bool first = true;
  for (const auto& chi : chars) {
    Character pulled{p.source, zero_vec(a.field, a.dim)};
    for (std::size_t k = 0; k < a.dim; ++k)
      for (std::size_t x = 0; x < g.order(); ++x)
        if (!p.map(x, k).is_zero()) pulled.values[k] += p.map(x, k) * chi.values[x];
    ft.characters.push_back(pulled);
    YDModule kp = k_psi(pulled);
    ft.target = first ? kp : direct_sum(ft.target, kp);
    first = false;
  }
  if (!inverse(ft.matrix)) throw YDError("Fourier matrix is singular");
  auto chk = yd_morphism_check(ft.matrix, ft.source, ft.target);
  if (!chk.pass) throw YDError("Fourier transform is not a YD morphism: " + chk.witness);
  return ft;
}

CheckResult yd_morphism_check(const Matrix& f, const YDModule& v, const YDModule& w) {
  CheckResult r{"yd_morphism", true, ""};
  if (v.base != w.base) throw YDError("morphism between modules over different bases");
  if (f.rows() != w.dim || f.cols() != v.dim) throw YDError("morphism matrix has the wrong shape");
  for (std::size_t j = 0; j < v.act.size() && r.pass; ++j) {
    if (f * v.act[j] != w.act[j] * f) {
      r.pass = false;
      r.witness = "not linear at " + v.base->label(j);
    } else if (f * v.co[j] != w.co[j] * f) {
      r.pass = false;
      r.witness = "not colinear at " + v.base->label(j);
    }
  }
  return r;
}

std::vector<Matrix> yd_homs(const YDModule& v, const YDModule& w) {
  if (v.base != w.base) throw YDError("Hom between modules over different bases");
  FDModule mv{v.field(), v.dim, v.act}, mw{w.field(), w.dim, w.act};
  mv.act.insert(mv.act.end(), v.co.begin(), v.co.end());
  mw.act.insert(mw.act.end(), w.co.begin(), w.co.end());
  return module_homs(mv, mw);
}

std::optional<Matrix> yd_iso_search(const YDModule& v, const YDModule& w, std::uint64_t seed, int tries) {
  if (v.dim != w.dim || v.base != w.base) return std::nullopt;
  auto homs = yd_homs(v, w);
  if (homs.empty()) return v.dim == 0 ? std::optional<Matrix>(Matrix(v.field(), 0, 0)) : std::nullopt;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < tries; ++t) {
    Matrix m(v.field(), w.dim, v.dim);
    for (const auto& h : homs) m += h.scaled(random_scalar(v.field(), rng));
    if (inverse(m) && yd_morphism_check(m, v, w).pass) return m;
  }
  return std::nullopt;
}

FDModule yd_to_double_module(const YDModule& v, const DrinfeldDouble& d) {
  const std::size_t n = d.base_dim;
  FDModule m{v.field(), v.dim, std::vector<Matrix>(n * n)};
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j) m.act[d.index(l, j)] = v.act[j] * v.co[l];
  return m;
}

YDModule double_module_to_yd(const FDModule& m, HopfPtr ap) {
  const FinDimHopf& a = *ap;
  const std::size_t n = a.dim;
  if (m.act.size() != n * n) throw YDError("module is not over the double of this algebra");
  YDModule v{ap, m.dim, {}, {}};
  for (std::size_t j = 0; j < n; ++j) {
    Matrix x(a.field, m.dim, m.dim);
    for (std::size_t l = 0; l < n; ++l)
      if (!a.counit[l].is_zero()) x += m.act[l * n + j].scaled(a.counit[l]);
    v.act.push_back(std::move(x));
  }
  for (std::size_t l = 0; l < n; ++l) {
    Matrix x(a.field, m.dim, m.dim);
    for (std::size_t j = 0; j < n; ++j)
      if (!a.unit[j].is_zero()) x += m.act[l * n + j].scaled(a.unit[j]);
    v.co.push_back(std::move(x));
  }
  return v;
}

}  // namespace hgs
