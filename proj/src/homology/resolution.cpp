#include <functional>
#include <random>
#include <string>

#include "hgs/homology.hpp"

namespace hgs {

namespace {

Scalar random_scalar(Field f, std::mt19937_64& rng) {
  if (f.is_finite()) return f.from_code(rng() % f.order());
  Scalar s = f.from_int(static_cast<long>(rng() % 7) - 3);
  if (f.degree() > 1) s += f.generator() * f.from_int(static_cast<long>(rng() % 5) - 2);
  return s;
}

// v minus its projection onto the RREF basis of s
Vec reduce(const Subspace& s, Vec v) {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Scalar c = v[s.pivots()[i]];
    if (!c.is_zero()) axpy(v, -c, s.basis()[i]);
  }
  return v;
}

using Action = std::function<Vec(const Vec&, std::size_t)>;

// Generators of the module U (a subspace closed under `act`). Minimal mode
// covers the top U/U.rad greedily: each new generator is the random
// candidate whose span grows the top most.
std::vector<Vec> choose_generators(const Subspace& u, const Action& act, std::size_t nalg, const Subspace& rad,
                                   const ResolutionOptions& opt, std::mt19937_64& rng) {
  const Field f = u.field();
  if (!opt.minimal) return u.basis();
  auto orbit = [&](const Vec& g) {
    std::vector<Vec> out{g};
    for (std::size_t k = 0; k < nalg; ++k) out.push_back(act(g, k));
    return out;
  };
  std::vector<Vec> urad;
  for (const auto& b : u.basis()) {
    std::vector<Vec> images;
    for (std::size_t k = 0; k < nalg; ++k) images.push_back(act(b, k));
    for (const auto& r : rad.basis()) {
      Vec x = zero_vec(f, u.ambient());
      for (std::size_t k = 0; k < nalg; ++k)
        if (!r[k].is_zero()) axpy(x, r[k], images[k]);
      urad.push_back(std::move(x));
    }
  }
  Subspace top_kernel(f, u.ambient(), urad);
  Subspace span(f, u.ambient(), {});
  std::vector<Vec> gens;
  const int tries = 24;
  while (true) {
    Subspace t = subspace_sum(span, top_kernel);
    if (t.dim() == u.dim()) break;
    Vec best;
    std::size_t best_gain = 0;
    for (int attempt = 0; attempt < tries; ++attempt) {
      Vec g = zero_vec(f, u.ambient());
      for (const auto& b : u.basis()) axpy(g, random_scalar(f, rng), b);
      if (t.contains(g)) continue;
      std::vector<Vec> red;
      for (auto& x : orbit(g)) red.push_back(reduce(t, std::move(x)));
      std::size_t gain = rref_rows(f, u.ambient(), red).size();
      if (gain > best_gain) {
        best_gain = gain;
        best = g;
        if (t.dim() + gain == u.dim()) break;
      }
    }
    if (best.empty())
      for (const auto& b : u.basis())
        if (!t.contains(b)) {
          best = b;
          break;
        }
    auto o = orbit(best);
    o.insert(o.end(), span.basis().begin(), span.basis().end());
    span = Subspace(f, u.ambient(), o);
    gens.push_back(best);
    if (gens.size() > opt.rank_ceiling)
      throw ResolutionError("free rank exceeds the ceiling of " + std::to_string(opt.rank_ceiling), gens.size());
  }
  if (span != u) throw std::logic_error("generators of the top do not generate the module");
  return gens;
}

}  // namespace

ExtEngine::ExtEngine(std::shared_ptr<const FinDimAlgebra> d) : d_(std::move(d)), rad_(hgs::radical(*d_)) {
  for (std::size_t k = 0; k < d_->dim; ++k) right_.push_back(SparseMatrix::from_dense(d_->right_mult(k)));
}

FreeResolution ExtEngine::resolve(const FDModule& m, const ResolutionOptions& opt) const {
  const FinDimAlgebra& d = *d_;
  const std::size_t n = d.dim, top = opt.max_degree + 1;
  const Field f = d.field;
  if (m.act.size() != n) throw std::invalid_argument("module is over a different algebra");
  std::mt19937_64 rng(opt.seed);
  FreeResolution res;
  res.algebra = d_;
  res.module = m;
  auto check_rank = [&](std::size_t r) {
    if (r > opt.rank_ceiling)
      throw ResolutionError("free rank " + std::to_string(r) + " exceeds the ceiling of " +
                                std::to_string(opt.rank_ceiling),
                            r);
  };

  // stage 0: D^{r0} -> M
  Action act_m = [&](const Vec& v, std::size_t k) { return m.act[k].apply(v); };
  auto g0 = choose_generators(Subspace::whole(f, m.dim), act_m, n, rad_, opt, rng);
  check_rank(g0.size());
  SparseMatrix aug(f, m.dim, n * g0.size());
  for (std::size_t c = 0; c < g0.size(); ++c)
    for (std::size_t k = 0; k < n; ++k) {
      Vec col = m.act[k].apply(g0[c]);
      for (std::size_t r = 0; r < m.dim; ++r)
        if (!col[r].is_zero()) aug.add(r, c * n + k, col[r]);
    }
  res.ranks.push_back(g0.size());
  res.generators.push_back(g0);
  res.differentials.push_back(aug);
  bool surjective = rank(aug) == m.dim;
  res.verification.checks.push_back({"augmentation_surjective", surjective, surjective ? "" : "stage 0"});
  CheckResult dd{"d_squared_zero", true, ""}, exact{"exactness", true, ""};

  if (semisimple() && opt.minimal) {
    res.projective_terminal = true;
    for (std::size_t i = 1; i <= top; ++i) {
      res.ranks.push_back(0);
      res.generators.emplace_back();
      res.differentials.emplace_back(f, n * res.ranks[i - 1], 0);
    }
    res.verification.checks.push_back(dd);
    res.verification.checks.push_back(exact);
    return res;
  }

  Subspace kern = kernel(aug);
  for (std::size_t i = 1; i <= top; ++i) {
    const std::size_t prev = res.ranks[i - 1];
    Action act_free = [&](const Vec& v, std::size_t k) {
      Vec out = zero_vec(f, v.size());
      for (std::size_t c = 0; c < prev; ++c) {
        Vec seg(v.begin() + c * n, v.begin() + (c + 1) * n);
        Vec img = right_[k].apply(seg);
        std::copy(img.begin(), img.end(), out.begin() + c * n);
      }
      return out;
    };
    std::vector<Vec> gens;
    if (kern.dim() > 0) gens = choose_generators(kern, act_free, n, rad_, opt, rng);
    check_rank(gens.size());
    SparseMatrix di(f, n * prev, n * gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec col = act_free(gens[j], k);
        for (std::size_t r = 0; r < col.size(); ++r)
          if (!col[r].is_zero()) di.add(r, j * n + k, col[r]);
      }
    if (dd.pass && gens.size() > 0 && (res.differentials[i - 1] * di).nonzeros() != 0) {
      dd.pass = false;
      dd.witness = "stage " + std::to_string(i);
    }
    std::size_t rk = rank(di);
    if (exact.pass && rk != kern.dim()) {
      exact.pass = false;
      exact.witness = "stage " + std::to_string(i);
    }
    res.ranks.push_back(gens.size());
    res.generators.push_back(std::move(gens));
    res.differentials.push_back(di);
    if (i < top) kern = kernel(di);
  }
  res.verification.checks.push_back(dd);
  res.verification.checks.push_back(exact);
  return res;
}

std::vector<std::size_t> ExtEngine::ext_dims(const FreeResolution& r, const FDModule& nmod) const {
  const std::size_t top = r.ranks.size() - 1, n = d_->dim, dn = nmod.dim;
  const Field f = d_->field;
  if (nmod.act.size() != n) throw std::invalid_argument("coefficient module is over a different algebra");
  std::vector<std::size_t> out(top, 0);
  if (r.projective_terminal) {
    out[0] = module_homs(r.module, nmod).size();
    return out;
  }
  // delta_i : N^{r_{i-1}} -> N^{r_i}, block (j, c) = rho_N(x_jc)
  std::vector<std::size_t> rk(top + 2, 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 1; i <= top; ++i) {
    const std::size_t ri = r.ranks[i], rp = r.ranks[i - 1];
    SparseMatrix delta(f, ri * dn, rp * dn);
    for (std::size_t j = 0; j < ri; ++j)
      for (std::size_t c = 0; c < rp; ++c) {
        Vec x(r.generators[i][j].begin() + c * n, r.generators[i][j].begin() + (c + 1) * n);
        if (is_zero(x)) continue;
        Matrix block = nmod.rho(x);
        for (std::size_t a = 0; a < dn; ++a)
          for (std::size_t b = 0; b < dn; ++b)
            if (!block(a, b).is_zero()) delta.add(j * dn + a, c * dn + b, block(a, b));
      }
    rk[i] = rank(delta);
  }
  for (std::size_t i = 0; i < top; ++i) out[i] = r.ranks[i] * dn - rk[i + 1] - rk[i];
  return out;
}

FreeResolution minimal_free_resolution(const FinDimAlgebra& d, const FDModule& m, std::size_t max_degree) {
  ExtEngine e(std::make_shared<const FinDimAlgebra>(d));
  ResolutionOptions opt;
  opt.max_degree = max_degree;
  return e.resolve(m, opt);
}

std::vector<std::size_t> ext_dims(const FinDimAlgebra& d, const FDModule& m, const FDModule& n, std::size_t max_degree) {
  ExtEngine e(std::make_shared<const FinDimAlgebra>(d));
  ResolutionOptions opt;
  opt.max_degree = max_degree;
  return e.ext_dims(e.resolve(m, opt), n);
}

std::vector<std::size_t> cyclic_oracle(std::size_t n, Field f, std::size_t max_degree) {
  // on Hom(kZ_n, k) = k, h - 1 induces eps(h) - 1 and the norm induces n
  Scalar odd = f.one() - f.one(), even = f.zero();
  for (std::size_t t = 0; t < n; ++t) even += f.one();
  auto rank_of = [&](std::size_t i) -> std::size_t {
    if (i == 0) return 0;
    return (i % 2 == 1 ? odd : even).is_zero() ? 0 : 1;
  };
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= max_degree; ++i) out.push_back(1 - rank_of(i + 1) - rank_of(i));
  return out;
}

}  // namespace hgs
