#include <cstdio>
#include <stdexcept>

#include "hgs/homology.hpp"

namespace hgs {

namespace {

struct Fnv {
  std::uint64_t h = 1469598103934665603ULL;
  void add(const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  }
  void add(const SparseVec& v) {
    for (const auto& [i, c] : v) add(std::to_string(i) + ":" + c.to_string());
    add("|");
  }
};

std::vector<std::size_t> sum_dims(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

CheckResult exact_sequence_hypothesis(const HopfMorphism& i, const HopfMorphism& p) {
  if (i.target != p.source) return {"exact_sequence", false, "i and p do not share the middle algebra"};
  auto w = verify_exact_sequence(i, p);
  std::string why;
  if (!w.cond1) why = "i not injective or p not surjective";
  else if (!w.cond2) why = "ker p differs from B^+A or AB^+";
  else if (!w.cond3) why = "coinvariants differ from i(B)";
  return {"exact_sequence", w.all(), why};
}

void finish(EqualityReport& r) {
  r.accepted = r.hypotheses.all_pass();
  for (const auto& c : r.hypotheses.checks)
    if (!c.pass) {
      r.rejection = c.witness.empty() ? c.name : c.witness;
      break;
    }
}

void compare(EqualityReport& r) {
  for (std::size_t d = 0; d < r.lhs.size(); ++d) r.per_degree.push_back(r.lhs[d] == r.rhs[d]);
}

}  // namespace

std::string structure_hash(const FinDimHopf& a) {
  Fnv f;
  f.add(a.field.to_string());
  f.add(std::to_string(a.dim));
  for (const auto& v : a.mult) f.add(v);
  for (const auto& v : a.comult) f.add(v);
  f.add(to_sparse(a.unit));
  f.add(to_sparse(a.counit));
  for (std::size_t k = 0; k < a.dim; ++k) f.add(to_sparse(a.antipode.col(k)));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(f.h));
  return buf;
}

GSEngine::GSEngine(HopfPtr a, std::size_t max_degree, ResolutionOptions opt)
    : a_(std::move(a)),
      double_(std::make_shared<const DrinfeldDouble>(drinfeld_double(*a_))),
      engine_(std::shared_ptr<const FinDimAlgebra>(double_, &double_->algebra)) {
  opt.max_degree = max_degree;
  res_ = engine_.resolve(yd_to_double_module(trivial_yd(a_), *double_), opt);
  if (!res_.verification.all_pass())
    throw std::logic_error("resolution failed verification: " + res_.verification.first_failure());
}

std::vector<std::size_t> GSEngine::dims(const YDModule& v) const {
  if (v.base != a_) throw std::invalid_argument("coefficient module is over a different Hopf algebra");
  return engine_.ext_dims(res_, yd_to_double_module(v, *double_));
}

CohomologyTable GSEngine::table(const YDModule& v, const std::string& coefficients) const {
  CohomologyTable t;
  t.algebra = "dim " + std::to_string(a_->dim);
  t.algebra_hash = structure_hash(*a_);
  t.field = a_->field.to_string();
  t.coefficients = coefficients;
  t.dims = dims(v);
  t.max_degree = t.dims.size() - 1;
  return t;
}

CohomologyTable gs_cohomology(HopfPtr a, const YDModule& v, std::size_t max_degree) {
  return GSEngine(a, max_degree).table(v, "V (dim " + std::to_string(v.dim) + ")");
}

CohomologyTable bialgebra_cohomology(HopfPtr a, std::size_t max_degree) {
  GSEngine e(a, max_degree);
  return e.table(trivial_yd(a), "k");
}

bool EqualityReport::all_equal() const {
  if (!accepted || lhs.size() != rhs.size()) return false;
  for (bool b : per_degree)
    if (!b) return false;
  return true;
}

EqualityReport verify_corollary(const HopfMorphism& i, const HopfMorphism& p, std::size_t max_degree,
                                const ResolutionOptions& opt) {
  EqualityReport r;
  r.hypotheses.checks.push_back(exact_sequence_hypothesis(i, p));
  if (!p.target || !p.target->group) {
    r.hypotheses.checks.push_back({"group_algebra", false, "p does not land in a group algebra"});
    finish(r);
    return r;
  }
  const FinDimHopf& l = *p.target;
  const Group& g = *l.group;
  r.hypotheses.checks.push_back({"cocentral", cocentral_check(p).pass, "p is not cocentral"});
  r.hypotheses.checks.push_back({"abelian", g.is_abelian(), "Γ is not abelian"});
  bool invertible = !l.field.from_int(static_cast<long>(g.order())).is_zero();
  r.hypotheses.checks.push_back({"order_invertible", invertible, "|Γ| = 0 in k"});
  bool roots = invertible && g.is_abelian() && group_characters(p.target).size() == g.order();
  r.hypotheses.checks.push_back({"roots_of_unity", roots, "insufficient roots of unity"});
  for (auto& c : r.hypotheses.checks)
    if (c.pass) c.witness.clear();
  finish(r);
  if (!r.accepted) return r;

  auto ft = fourier_transform(p);
  r.lhs = GSEngine(i.source, max_degree, opt).dims(trivial_yd(i.source));
  GSEngine a(p.source, max_degree, opt);
  r.rhs.assign(max_degree + 1, 0);
  for (const auto& psi : ft.characters) r.rhs = sum_dims(r.rhs, a.dims(k_psi(psi)));
  compare(r);
  return r;
}

EqualityReport verify_theorem_restriction(const HopfMorphism& i, const HopfMorphism& p, const YDModule& x,
                                          std::size_t max_degree, const ResolutionOptions& opt) {
  EqualityReport r;
  r.hypotheses.checks.push_back(exact_sequence_hypothesis(i, p));
  if (!p.target) {
    r.hypotheses.checks.push_back({"cosemisimple", false, "L is not a Hopf algebra"});
    finish(r);
    return r;
  }
  bool cosemisimple = radical(dual_hopf(*p.target).algebra()).dim() == 0;
  r.hypotheses.checks.push_back({"cosemisimple", cosemisimple, cosemisimple ? "" : "L is not cosemisimple"});
  bool same_base = x.base == p.source;
  r.hypotheses.checks.push_back({"coefficient_base", same_base, same_base ? "" : "X is not over A"});
  if (same_base) {
    auto y = yd_check(x);
    r.hypotheses.checks.push_back({"yd_module", y.all_pass(), y.first_failure()});
  }
  finish(r);
  if (!r.accepted) return r;

  auto restricted = restrict_to(x, i);
  r.lhs = GSEngine(i.source, max_degree, opt).dims(restricted.module);
  YDModule l_dual = dual_yd(coadjoint(p.source, p.map));
  r.rhs = GSEngine(p.source, max_degree, opt).dims(tensor_yd(x, l_dual));
  compare(r);
  return r;
}

std::string ObservedDimension::to_string() const {
  return saturated ? "≥ " + std::to_string(value) : std::to_string(value);
}

ObservedDimension cd_from_dims(const std::vector<std::vector<std::size_t>>& dims, std::size_t max_degree) {
  if (dims.empty()) throw std::invalid_argument("no coefficients");
  ObservedDimension out;
  for (const auto& d : dims)
    for (std::size_t i = 0; i < d.size() && i <= max_degree; ++i)
      if (d[i] != 0 && i >= out.value) out.value = i;
  bool top_nonzero = false;
  for (const auto& d : dims) top_nonzero |= d.size() > max_degree && d[max_degree] != 0;
  out.saturated = top_nonzero;
  return out;
}

ObservedDimension cd_gs_observed(HopfPtr a, const std::vector<YDModule>& coefficients, std::size_t max_degree) {
  if (coefficients.empty()) throw std::invalid_argument("no coefficients");
  GSEngine e(a, max_degree);
  std::vector<std::vector<std::size_t>> dims;
  for (const auto& v : coefficients) dims.push_back(e.dims(v));
  return cd_from_dims(dims, max_degree);
}

}  // namespace hgs
