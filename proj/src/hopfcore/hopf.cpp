#include "hgs/hopf.hpp"

#include <map>
#include <stdexcept>

namespace hgs {

namespace {

using Acc = std::map<std::size_t, Scalar>;

void acc_add(Acc& a, std::size_t i, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = a.find(i);
  if (it == a.end()) {
    a.emplace(i, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
  }
}

SparseVec acc_to_sparse(const Acc& a) {
  SparseVec out;
  for (const auto& [i, c] : a)
    if (!c.is_zero()) out.emplace_back(i, c);
  return out;
}

std::string tuple_label(const FinDimHopf& h, std::initializer_list<std::size_t> ks) {
  std::string s = "(";
  bool first = true;
  for (auto k : ks) {
    if (!first) s += ", ";
    s += h.label(k);
    first = false;
  }
  return s + ")";
}

}  // namespace

Vec FinDimHopf::mul(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j)
      if (!y[j].is_zero()) add_sparse(out, x[i] * y[j], mult[i * dim + j]);
  }
  return out;
}

Vec FinDimHopf::comul(const Vec& x) const {
  Vec out = zero_vec(field, dim * dim);
  for (std::size_t k = 0; k < dim; ++k) add_sparse(out, x[k], comult[k]);
  return out;
}

Scalar FinDimHopf::eps(const Vec& x) const {
  Scalar s = field.zero();
  for (std::size_t k = 0; k < dim; ++k)
    if (!x[k].is_zero()) s += x[k] * counit[k];
  return s;
}

FinDimAlgebra FinDimHopf::algebra() const { return FinDimAlgebra{field, dim, mult, unit}; }

FinDimHopf group_algebra(const Group& g, Field f) {
  FinDimHopf h;
  h.field = f;
  h.dim = g.order();
  h.labels = g.names();
  const std::size_t n = h.dim;
  h.mult.resize(n * n);
  h.comult.resize(n);
  h.antipode = Matrix(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) h.mult[a * n + b] = {{g.mul(a, b), f.one()}};
    h.comult[a] = {{a * n + a, f.one()}};
    h.antipode(g.inverse(a), a) = f.one();
  }
  h.unit = unit_vec(f, n, g.identity());
  h.counit.assign(n, f.one());
  h.group = std::make_shared<const Group>(g);
  return h;
}

FinDimHopf dual_hopf(const FinDimHopf& h) {
  const std::size_t n = h.dim;
  FinDimHopf d;
  d.field = h.field;
  d.dim = n;
  for (std::size_t k = 0; k < n; ++k) d.labels.push_back("f_" + h.label(k));
  std::vector<Acc> mult(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [st, c] : h.comult[k]) acc_add(mult[st], k, c);
  for (auto& a : mult) d.mult.push_back(acc_to_sparse(a));
  std::vector<Acc> comult(n);
  for (std::size_t ij = 0; ij < n * n; ++ij)
    for (const auto& [k, c] : h.mult[ij]) acc_add(comult[k], ij, c);
  for (auto& a : comult) d.comult.push_back(acc_to_sparse(a));
  d.unit = h.counit;
  d.counit = h.unit;
  d.antipode = h.antipode.transpose();
  return d;
}

CheckReport check_hopf_axioms(const FinDimHopf& h) {
  const std::size_t n = h.dim;
  const Field f = h.field;
  CheckReport rep;
  auto prod = [&](std::size_t i, std::size_t j) {
    Vec v = zero_vec(f, n);
    add_sparse(v, f.one(), h.mult[i * n + j]);
    return v;
  };

  CheckResult assoc{"associativity", true, ""};
  for (std::size_t i = 0; i < n && assoc.pass; ++i)
    for (std::size_t j = 0; j < n && assoc.pass; ++j) {
      Vec ij = prod(i, j);
      for (std::size_t k = 0; k < n && assoc.pass; ++k)
        if (h.mul(ij, h.basis(k)) != h.mul(h.basis(i), prod(j, k))) {
          assoc.pass = false;
          assoc.witness = tuple_label(h, {i, j, k});
        }
    }
  rep.checks.push_back(assoc);

  CheckResult unit{"unit", true, ""};
  for (std::size_t i = 0; i < n && unit.pass; ++i)
    if (h.mul(h.unit, h.basis(i)) != h.basis(i) || h.mul(h.basis(i), h.unit) != h.basis(i)) {
      unit.pass = false;
      unit.witness = tuple_label(h, {i});
    }
  rep.checks.push_back(unit);

  CheckResult coassoc{"coassociativity", true, ""};
  for (std::size_t k = 0; k < n && coassoc.pass; ++k) {
    Acc lhs, rhs;
    for (const auto& [st, c] : h.comult[k]) {
      std::size_t s = st / n, t = st % n;
      for (const auto& [uv, d] : h.comult[s]) acc_add(lhs, uv * n + t, c * d);
      for (const auto& [uv, d] : h.comult[t]) acc_add(rhs, s * n * n + uv, c * d);
    }
    if (acc_to_sparse(lhs) != acc_to_sparse(rhs)) {
      coassoc.pass = false;
      coassoc.witness = tuple_label(h, {k});
    }
  }
  rep.checks.push_back(coassoc);

  CheckResult counit{"counit", true, ""};
  for (std::size_t k = 0; k < n && counit.pass; ++k) {
    Vec left = zero_vec(f, n), right = zero_vec(f, n);
    for (const auto& [st, c] : h.comult[k]) {
      std::size_t s = st / n, t = st % n;
      left[t] += c * h.counit[s];
      right[s] += c * h.counit[t];
    }
    if (left != h.basis(k) || right != h.basis(k)) {
      counit.pass = false;
      counit.witness = tuple_label(h, {k});
    }
  }
  rep.checks.push_back(counit);

  CheckResult dmult{"comultiplication_multiplicative", true, ""};
  {
    Acc one_one;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) acc_add(one_one, s * n + t, h.unit[s] * h.unit[t]);
    if (to_sparse(h.comul(h.unit)) != acc_to_sparse(one_one)) {
      dmult.pass = false;
      dmult.witness = "Delta(1) != 1 (x) 1";
    }
  }
  for (std::size_t i = 0; i < n && dmult.pass; ++i)
    for (std::size_t j = 0; j < n && dmult.pass; ++j) {
      Vec lhs = h.comul(prod(i, j));
      Acc rhs;
      for (const auto& [st, c] : h.comult[i])
        for (const auto& [uv, d] : h.comult[j]) {
          std::size_t s = st / n, t = st % n, u = uv / n, v = uv % n;
          Scalar cd = c * d;
          for (const auto& [x, px] : h.mult[s * n + u])
            for (const auto& [y, qy] : h.mult[t * n + v]) acc_add(rhs, x * n + y, cd * px * qy);
        }
      if (to_sparse(lhs) != acc_to_sparse(rhs)) {
        dmult.pass = false;
        dmult.witness = tuple_label(h, {i, j});
      }
    }
  rep.checks.push_back(dmult);

  CheckResult emult{"counit_multiplicative", h.eps(h.unit).is_one(), ""};
  if (!emult.pass) emult.witness = "eps(1) != 1";
  for (std::size_t i = 0; i < n && emult.pass; ++i)
    for (std::size_t j = 0; j < n && emult.pass; ++j)
      if (h.eps(prod(i, j)) != h.counit[i] * h.counit[j]) {
        emult.pass = false;
        emult.witness = tuple_label(h, {i, j});
      }
  rep.checks.push_back(emult);

  CheckResult anti{"antipode", true, ""};
  for (std::size_t k = 0; k < n && anti.pass; ++k) {
    Vec left = zero_vec(f, n), right = zero_vec(f, n);
    for (const auto& [st, c] : h.comult[k]) {
      std::size_t s = st / n, t = st % n;
      axpy(left, c, h.mul(h.antipode.col(s), h.basis(t)));
      axpy(right, c, h.mul(h.basis(s), h.antipode.col(t)));
    }
    Vec target = scale(h.counit[k], h.unit);
    if (left != target || right != target) {
      anti.pass = false;
      anti.witness = tuple_label(h, {k});
    }
  }
  rep.checks.push_back(anti);
  return rep;
}

CheckReport morphism_check(const Matrix& f, const FinDimHopf& h1, const FinDimHopf& h2) {
  if (f.rows() != h2.dim || f.cols() != h1.dim) throw std::invalid_argument("morphism matrix has the wrong shape");
  const std::size_t n1 = h1.dim, n2 = h2.dim;
  CheckReport rep;
  std::vector<Vec> img(n1);
  for (std::size_t k = 0; k < n1; ++k) img[k] = f.col(k);

  CheckResult mult{"multiplicative", true, ""};
  for (std::size_t i = 0; i < n1 && mult.pass; ++i)
    for (std::size_t j = 0; j < n1 && mult.pass; ++j) {
      Vec lhs = zero_vec(h2.field, n2);
      for (const auto& [k, c] : h1.mult[i * n1 + j]) axpy(lhs, c, img[k]);
      if (lhs != h2.mul(img[i], img[j])) {
        mult.pass = false;
        mult.witness = tuple_label(h1, {i, j});
      }
    }
  rep.checks.push_back(mult);

  CheckResult unital{"unital", f.apply(h1.unit) == h2.unit, ""};
  if (!unital.pass) unital.witness = "f(1) != 1";
  rep.checks.push_back(unital);

  CheckResult comult{"comultiplicative", true, ""};
  for (std::size_t k = 0; k < n1 && comult.pass; ++k) {
    Acc lhs;
    for (const auto& [st, c] : h1.comult[k]) {
      const Vec& fs = img[st / n1];
      const Vec& ft = img[st % n1];
      for (std::size_t x = 0; x < n2; ++x) {
        if (fs[x].is_zero()) continue;
        for (std::size_t y = 0; y < n2; ++y)
          if (!ft[y].is_zero()) acc_add(lhs, x * n2 + y, c * fs[x] * ft[y]);
      }
    }
    if (acc_to_sparse(lhs) != to_sparse(h2.comul(img[k]))) {
      comult.pass = false;
      comult.witness = tuple_label(h1, {k});
    }
  }
  rep.checks.push_back(comult);

  CheckResult counital{"counital", true, ""};
  for (std::size_t k = 0; k < n1 && counital.pass; ++k)
    if (h2.eps(img[k]) != h1.counit[k]) {
      counital.pass = false;
      counital.witness = tuple_label(h1, {k});
    }
  rep.checks.push_back(counital);

  CheckResult anti{"antipode", true, ""};
  for (std::size_t k = 0; k < n1 && anti.pass; ++k)
    if (h2.S(img[k]) != f.apply(h1.antipode.col(k))) {
      anti.pass = false;
      anti.witness = tuple_label(h1, {k});
    }
  rep.checks.push_back(anti);
  return rep;
}

bool is_hopf_morphism(const CheckReport& r) {
  for (const char* name : {"multiplicative", "unital", "comultiplicative", "counital"}) {
    const CheckResult* c = r.find(name);
    if (!c || !c->pass) return false;
  }
  return true;
}

HopfMorphism group_algebra_map(HopfPtr src, HopfPtr tgt, const std::vector<std::size_t>& images) {
  if (!src->group || !tgt->group) throw std::invalid_argument("group_algebra_map needs group algebras");
  if (images.size() != src->dim) throw std::invalid_argument("one image per source element required");
  Matrix m(tgt->field, tgt->dim, src->dim);
  for (std::size_t g = 0; g < src->dim; ++g) m(images.at(g), g) = tgt->field.one();
  return {std::move(src), std::move(tgt), std::move(m)};
}

HopfMorphism subgroup_inclusion(HopfPtr kg, const std::vector<std::size_t>& elements) {
  if (!kg->group) throw std::invalid_argument("subgroup_inclusion needs a group algebra");
  Subgroup sub = make_subgroup(*kg->group, elements);
  auto kn = make_group_algebra(sub.group, kg->field);
  return group_algebra_map(kn, std::move(kg), sub.elements);
}

HopfMorphism quotient_map(HopfPtr kg, const std::vector<std::size_t>& normal) {
  if (!kg->group) throw std::invalid_argument("quotient_map needs a group algebra");
  QuotientGroup q = quotient_group(*kg->group, normal);
  auto kq = make_group_algebra(q.group, kg->field);
  return group_algebra_map(std::move(kg), kq, q.projection);
}

HopfMorphism dual_morphism(const HopfMorphism& f, HopfPtr target_dual, HopfPtr source_dual) {
  if (target_dual->dim != f.target->dim || source_dual->dim != f.source->dim)
    throw std::invalid_argument("dual algebras have the wrong dimensions");
  return {std::move(target_dual), std::move(source_dual), f.map.transpose()};
}

CheckResult cocentral_check(const Matrix& p, const FinDimHopf& a) {
  const std::size_t n = a.dim, nl = p.rows();
  CheckResult r{"cocentral", true, ""};
  for (std::size_t k = 0; k < n && r.pass; ++k) {
    Acc lhs, rhs;
    for (const auto& [st, c] : a.comult[k]) {
      std::size_t s = st / n, t = st % n;
      for (std::size_t l = 0; l < nl; ++l) {
        acc_add(lhs, l * n + t, c * p(l, s));
        acc_add(rhs, l * n + s, c * p(l, t));
      }
    }
    if (acc_to_sparse(lhs) != acc_to_sparse(rhs)) {
      r.pass = false;
      r.witness = tuple_label(a, {k});
    }
  }
  return r;
}

Subspace augmentation_right_ideal(const HopfMorphism& i) {
  const FinDimHopf& a = *i.target;
  const FinDimHopf& b = *i.source;
  Matrix eps_b(b.field, 1, b.dim);
  for (std::size_t k = 0; k < b.dim; ++k) eps_b(0, k) = b.counit[k];
  std::vector<Vec> span;
  for (const auto& x : kernel(eps_b).basis()) {
    Vec ix = i.map.apply(x);
    for (std::size_t k = 0; k < a.dim; ++k) span.push_back(a.mul(ix, a.basis(k)));
  }
  return Subspace(a.field, a.dim, span);
}

ExactSequenceWitness verify_exact_sequence(const HopfMorphism& i, const Matrix& p) {
  const FinDimHopf& a = *i.target;
  const FinDimHopf& b = *i.source;
  const std::size_t n = a.dim, nl = p.rows();
  if (p.cols() != n) throw std::invalid_argument("p does not start at the middle algebra");
  ExactSequenceWitness w;
  w.injective = rank(i.map) == b.dim;
  w.surjective = rank(p) == nl;
  w.cond1 = w.injective && w.surjective;

  Matrix eps_b(b.field, 1, b.dim);
  for (std::size_t k = 0; k < b.dim; ++k) eps_b(0, k) = b.counit[k];
  std::vector<Vec> ba, ab;
  for (const auto& x : kernel(eps_b).basis()) {
    Vec ix = i.map.apply(x);
    for (std::size_t k = 0; k < n; ++k) {
      ba.push_back(a.mul(ix, a.basis(k)));
      ab.push_back(a.mul(a.basis(k), ix));
    }
  }
  w.bplus_a = Subspace(a.field, n, ba);
  w.a_bplus = Subspace(a.field, n, ab);
  w.ker_p = kernel(p);
  w.cond2 = w.ker_p == w.bplus_a && w.ker_p == w.a_bplus;

  // (id (x) p)Delta(a) - a (x) p(1) and (p (x) id)Delta(a) - p(1) (x) a
  Vec p1 = p.apply(a.unit);
  SparseMatrix right(a.field, n * nl, n), left(a.field, nl * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [st, c] : a.comult[k]) {
      std::size_t s = st / n, t = st % n;
      for (std::size_t l = 0; l < nl; ++l) {
        if (!p(l, t).is_zero()) right.add(s * nl + l, k, c * p(l, t));
        if (!p(l, s).is_zero()) left.add(l * n + t, k, c * p(l, s));
      }
    }
    for (std::size_t l = 0; l < nl; ++l)
      if (!p1[l].is_zero()) {
        right.add(k * nl + l, k, -p1[l]);
        left.add(l * n + k, k, -p1[l]);
      }
  }
  w.coinv_right = kernel(right);
  w.coinv_left = kernel(left);
  w.image_i = image(i.map);
  w.cond3 = w.image_i == w.coinv_right && w.image_i == w.coinv_left;

  Matrix pi = p * i.map;
  Matrix expect(a.field, nl, b.dim);
  for (std::size_t k = 0; k < b.dim; ++k)
    for (std::size_t l = 0; l < nl; ++l) expect(l, k) = b.counit[k] * p1[l];
  w.pi_is_counit = pi == expect;
  return w;
}

HopfQuotient quotient_by_coideal(const FinDimHopf& a, const Subspace& ideal) {
  const std::size_t n = a.dim;
  HopfQuotient q;
  q.proj = quotient_projection(ideal);
  q.reps = quotient_representatives(ideal);
  q.dim = q.reps.size();
  const std::size_t m = q.dim;
  auto pp = [&](const Vec& x) {
    // (p (x) p) applied to Delta(x)
    Vec out = zero_vec(a.field, m * m);
    Vec dx = a.comul(x);
    for (std::size_t st = 0; st < n * n; ++st) {
      if (dx[st].is_zero()) continue;
      std::size_t s = st / n, t = st % n;
      for (std::size_t u = 0; u < m; ++u) {
        if (q.proj(u, s).is_zero()) continue;
        for (std::size_t v = 0; v < m; ++v)
          if (!q.proj(v, t).is_zero()) out[u * m + v] += dx[st] * q.proj(u, s) * q.proj(v, t);
      }
    }
    return out;
  };
  for (const auto& x : ideal.basis())
    if (!a.eps(x).is_zero() || !is_zero(pp(x))) throw std::invalid_argument("subspace is not a coideal");
  for (std::size_t r = 0; r < m; ++r) {
    q.comult.push_back(to_sparse(pp(a.basis(q.reps[r]))));
    q.counit.push_back(a.counit[q.reps[r]]);
  }

  bool hopf_ideal = ideal.dim() < n;
  for (const auto& x : ideal.basis()) {
    if (!hopf_ideal) break;
    if (!ideal.contains(a.S(x))) hopf_ideal = false;
    for (std::size_t k = 0; k < n && hopf_ideal; ++k)
      hopf_ideal = ideal.contains(a.mul(x, a.basis(k))) && ideal.contains(a.mul(a.basis(k), x));
  }
  if (hopf_ideal) {
    FinDimHopf l;
    l.field = a.field;
    l.dim = m;
    for (std::size_t r = 0; r < m; ++r) l.labels.push_back("[" + a.label(q.reps[r]) + "]");
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s)
        l.mult.push_back(to_sparse(q.proj.apply(a.mul(a.basis(q.reps[r]), a.basis(q.reps[s])))));
    l.unit = q.proj.apply(a.unit);
    l.comult = q.comult;
    l.counit = q.counit;
    l.antipode = Matrix(a.field, m, m);
    for (std::size_t r = 0; r < m; ++r) {
      Vec s = q.proj.apply(a.antipode.col(q.reps[r]));
      for (std::size_t u = 0; u < m; ++u) l.antipode(u, r) = s[u];
    }
    q.hopf = std::move(l);
  }
  return q;
}

HopfQuotient quotient_by_subalgebra(const HopfMorphism& i) {
  return quotient_by_coideal(*i.target, augmentation_right_ideal(i));
}

std::vector<SparseVec> straightening(const FinDimHopf& a) {
  const std::size_t n = a.dim;
  // T[(s*n + r)*n + u] = S(a_s) a_r a_u
  std::vector<SparseVec> T(n * n * n);
  for (std::size_t s = 0; s < n; ++s) {
    Vec sa = a.antipode.col(s);
    for (std::size_t r = 0; r < n; ++r) {
      Vec sar = a.mul(sa, a.basis(r));
      for (std::size_t u = 0; u < n; ++u) T[(s * n + r) * n + u] = to_sparse(a.mul(sar, a.basis(u)));
    }
  }
  std::vector<Acc> x(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    Acc d2;  // (Delta (x) id)Delta(a_j) over (s*n + t)*n + u
    for (const auto& [wu, c] : a.comult[j]) {
      std::size_t w = wu / n, u = wu % n;
      for (const auto& [st, d] : a.comult[w]) acc_add(d2, st * n + u, c * d);
    }
    for (const auto& [stu, c] : d2) {
      std::size_t s = stu / (n * n), t = (stu / n) % n, u = stu % n;
      for (std::size_t r = 0; r < n; ++r)
        for (const auto& [m, y] : T[(s * n + r) * n + u]) acc_add(x[j * n + m], r * n + t, c * y);
    }
  }
  std::vector<SparseVec> out;
  out.reserve(x.size());
  for (const auto& acc : x) out.push_back(acc_to_sparse(acc));
  return out;
}

DrinfeldDouble drinfeld_double(const FinDimHopf& a) {
  const std::size_t n = a.dim, nd = n * n;
  const Field f = a.field;
  if (!inverse(a.antipode)) throw std::domain_error("antipode is singular");
  auto straight = straightening(a);
  // (f_l (x) 1)(f_r (x) 1) = (f_r * f_l) (x) 1 = sum_q c^q_{rl} f_q
  std::vector<Acc> dprod(n * n);
  for (std::size_t q = 0; q < n; ++q)
    for (const auto& [st, c] : a.comult[q]) acc_add(dprod[(st % n) * n + st / n], q, c);

  DrinfeldDouble d;
  d.base_dim = n;
  d.algebra.field = f;
  d.algebra.dim = nd;
  d.algebra.mult.resize(nd * nd);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k) {
          Acc out;
          for (const auto& [rt, x] : straight[j * n + m]) {
            std::size_t r = rt / n, t = rt % n;
            for (const auto& [q, y] : dprod[l * n + r])
              for (const auto& [w, z] : a.mult[t * n + k]) acc_add(out, q * n + w, x * y * z);
          }
          d.algebra.mult[(l * n + j) * nd + m * n + k] = acc_to_sparse(out);
        }
  d.algebra.unit = zero_vec(f, nd);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j) d.algebra.unit[l * n + j] = a.counit[l] * a.unit[j];
  return d;
}

}  // namespace hgs
