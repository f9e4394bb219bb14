#include <algorithm>

#include "hgs/presented.hpp"

namespace hgs {

namespace {

NCPolynomial shift(const NCPolynomial& p, Letter by) {
  NCPolynomial out(p.field());
  for (const auto& [w, c] : p.terms()) {
    Word s = w;
    for (auto& x : s) x += by;
    out.add_term(s, c);
  }
  return out;
}

NCTensor shift(const NCTensor& t, Letter by) {
  NCTensor out(t.field());
  for (const auto& [w, c] : t.terms()) {
    Word l = w.first, r = w.second;
    for (auto& x : l) x += by;
    for (auto& x : r) x += by;
    out.add_term(l, r, c);
  }
  return out;
}

NCPolynomial mono(Field f, Word w) { return NCPolynomial::monomial(f.one(), std::move(w)); }

Matrix checked_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  if (m.rows() < 2) throw std::invalid_argument("matrix size must be at least 2");
  auto inv = inverse(m);
  if (!inv) throw std::invalid_argument("singular matrix");
  return *inv;
}

NCPolynomial delta_poly(Field f, std::size_t i, std::size_t j) {
  return i == j ? NCPolynomial::constant(f.one()) : NCPolynomial(f);
}

// entries of a square matrix of generators, row-major from `first`
NCTensor matrix_coproduct(Field f, Letter first, std::size_t n, std::size_t i, std::size_t j) {
  NCTensor t(f);
  for (std::size_t k = 0; k < n; ++k)
    t.add_term({static_cast<Letter>(first + i * n + k)}, {static_cast<Letter>(first + k * n + j)}, f.one());
  return t;
}

std::string relation_failure(const std::string& rel, const std::string& residue) { return rel + " -> " + residue; }

void push_check(CheckReport& r, const std::string& name, const std::string& witness) {
  r.checks.push_back({name, witness.empty(), witness});
}

}  // namespace

Letter PresentedHopf::index(const std::string& name) const {
  auto it = std::find(alphabet.begin(), alphabet.end(), name);
  if (it == alphabet.end()) throw std::invalid_argument("unknown generator " + name);
  return static_cast<Letter>(it - alphabet.begin());
}

NCPolynomial normal_form(const NCPolynomial& p, const PresentedHopf& h) {
  if (!h.rules) throw std::logic_error("presentation has not been completed");
  if (p.degree() > h.cap)
    throw DegreeError("degree " + std::to_string(p.degree()) + " above cap " + std::to_string(h.cap));
  return h.rules->reduce(p);
}

NCTensor normal_form(const NCTensor& t, const PresentedHopf& left, const PresentedHopf& right) {
  NCTensor out(t.field());
  std::map<Word, NCPolynomial> lmemo, rmemo;
  auto nf = [](std::map<Word, NCPolynomial>& memo, const Word& w, const PresentedHopf& h) -> const NCPolynomial& {
    auto it = memo.find(w);
    if (it == memo.end()) it = memo.emplace(w, normal_form(mono(h.field, w), h)).first;
    return it->second;
  };
  for (const auto& [w, c] : t.terms()) {
    const NCPolynomial& l = nf(lmemo, w.first, left);
    const NCPolynomial& r = nf(rmemo, w.second, right);
    for (const auto& [a, x] : l.terms())
      for (const auto& [b, y] : r.terms()) out.add_term(a, b, c * x * y);
  }
  return out;
}

std::vector<Word> normal_words(const PresentedHopf& h, std::size_t max_length) {
  if (!h.rules) throw std::logic_error("presentation has not been completed");
  if (max_length > h.cap)
    throw DegreeError("length " + std::to_string(max_length) + " above cap " + std::to_string(h.cap));
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Letter x = 0; x < h.size(); ++x) {
        Word w = out[i];
        w.push_back(x);
        if (h.rules->is_normal(w)) out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

std::vector<std::size_t> filtration_dims(const PresentedHopf& h, std::size_t max_length) {
  std::vector<std::size_t> out(max_length + 1, 0);
  for (const auto& w : normal_words(h, max_length))
    for (std::size_t d = w.size(); d <= max_length; ++d) ++out[d];
  return out;
}

NCTensor delta_of(const PresentedHopf& h, const NCPolynomial& p) {
  NCTensor out(h.field);
  for (const auto& [w, c] : p.terms()) {
    NCTensor t(h.field);
    t.add_term({}, {}, c);
    for (Letter x : w) t = t * h.delta.at(x);
    out += t;
  }
  return out;
}

Scalar counit_of(const PresentedHopf& h, const NCPolynomial& p) {
  Scalar s = h.field.zero();
  for (const auto& [w, c] : p.terms()) {
    Scalar t = c;
    for (Letter x : w) t *= h.counit.at(x);
    s += t;
  }
  return s;
}

NCPolynomial antipode_of(const PresentedHopf& h, const NCPolynomial& p) {
  NCPolynomial out(h.field);
  for (const auto& [w, c] : p.terms()) {
    NCPolynomial t = NCPolynomial::constant(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = t * h.antipode.at(*it);
    out += t;
  }
  return out;
}

CheckReport hopf_axiom_check_to_cap(const PresentedHopf& h) {
  const std::size_t n = h.size();
  if (h.delta.size() != n || h.counit.size() != n || h.antipode.size() != n)
    throw std::invalid_argument("structure maps are not given on every generator");
  const Field f = h.field;
  const std::size_t nrel = h.relations.size();
  std::vector<std::string> dw(nrel), ew(nrel), sw(nrel);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t r = 0; r < nrel; ++r) {
    const auto& rel = h.relations[r];
    auto d = normal_form(delta_of(h, rel), h, h);
    if (!d.is_zero()) dw[r] = relation_failure(h.str(rel), h.str(d));
    auto e = counit_of(h, rel);
    if (!e.is_zero()) ew[r] = relation_failure(h.str(rel), e.to_string());
    auto s = normal_form(antipode_of(h, rel), h);
    if (!s.is_zero()) sw[r] = relation_failure(h.str(rel), h.str(s));
  }
  auto first = [](const std::vector<std::string>& v) {
    for (const auto& s : v)
      if (!s.empty()) return s;
    return std::string();
  };
  CheckReport rep;
  push_check(rep, "delta_well_defined", first(dw));
  push_check(rep, "counit_well_defined", first(ew));
  push_check(rep, "antipode_well_defined", first(sw));

  std::string counit_fail, antipode_fail;
  for (Letter x = 0; x < n; ++x) {
    NCPolynomial gen = NCPolynomial::letter(f, x);
    NCPolynomial left(f), right(f), sl(f), sr(f);
    for (const auto& [w, c] : h.delta[x].terms()) {
      NCPolynomial a = mono(f, w.first), b = mono(f, w.second);
      left += b.scaled(c * counit_of(h, a));
      right += a.scaled(c * counit_of(h, b));
      sl += (antipode_of(h, a) * b).scaled(c);
      sr += (a * antipode_of(h, b)).scaled(c);
    }
    if (counit_fail.empty() && (normal_form(left - gen, h) != NCPolynomial(f) || normal_form(right - gen, h) != NCPolynomial(f)))
      counit_fail = h.alphabet[x];
    NCPolynomial unit = NCPolynomial::constant(h.counit[x]);
    if (antipode_fail.empty() && (!normal_form(sl - unit, h).is_zero() || !normal_form(sr - unit, h).is_zero()))
      antipode_fail = h.alphabet[x];
  }
  push_check(rep, "counit_axiom", counit_fail);
  push_check(rep, "antipode_identity", antipode_fail);
  return rep;
}

std::string letter_name(const std::string& base, std::size_t i, std::size_t j, std::size_t n) {
  if (n < 10) return base + std::to_string(i + 1) + std::to_string(j + 1);
  return base + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

PresentedHopf universal_cosovereign(const Matrix& fm, std::size_t cap, const CompletionOptions& opt) {
  Matrix finv = checked_inverse(fm);
  const Field f = fm.field();
  const std::size_t n = fm.rows();
  auto u = [&](std::size_t i, std::size_t j) { return NCPolynomial::letter(f, static_cast<Letter>(i * n + j)); };
  auto v = [&](std::size_t i, std::size_t j) { return NCPolynomial::letter(f, static_cast<Letter>(n * n + i * n + j)); };
  PresentedHopf h;
  h.field = f;
  h.cap = cap;
  for (const char* base : {"u", "v"})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h.alphabet.push_back(letter_name(base, i, j, n));

  std::vector<NCPolynomial> uvt, vtu, vfuf, fufv;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      NCPolynomial a = NCPolynomial(f) - delta_poly(f, i, j), b = a, c = a, d = a;
      for (std::size_t k = 0; k < n; ++k) {
        a += u(i, k) * v(j, k);
        b += v(k, i) * u(k, j);
      }
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t m = 0; m < n; ++m) {
            c += (v(i, k) * u(m, l)).scaled(fm(k, l) * finv(m, j));
            d += (u(l, k) * v(m, j)).scaled(fm(i, k) * finv(l, m));
          }
      uvt.push_back(a);
      vtu.push_back(b);
      vfuf.push_back(c);
      fufv.push_back(d);
    }
  for (auto* rs : {&uvt, &vtu, &vfuf, &fufv}) h.relations.insert(h.relations.end(), rs->begin(), rs->end());

  for (std::size_t block = 0; block < 2; ++block)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        h.delta.push_back(matrix_coproduct(f, static_cast<Letter>(block * n * n), n, i, j));
        h.counit.push_back(i == j ? f.one() : f.zero());
      }
  // S(u) = v^t, S(v) = F u^t F^-1
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.antipode.push_back(v(j, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      NCPolynomial s(f);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) s += u(l, k).scaled(fm(i, k) * finv(l, j));
      h.antipode.push_back(s);
    }
  return complete_to_cap(std::move(h), opt);
}

PresentedHopf bilinear_form_hopf(const Matrix& e, std::size_t cap, const CompletionOptions& opt) {
  Matrix einv = checked_inverse(e);
  const Field f = e.field();
  const std::size_t n = e.rows();
  auto a = [&](std::size_t i, std::size_t j) { return NCPolynomial::letter(f, static_cast<Letter>(i * n + j)); };
  PresentedHopf h;
  h.field = f;
  h.cap = cap;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.alphabet.push_back(letter_name("a", i, j, n));
  std::vector<NCPolynomial> left, right;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      NCPolynomial x = NCPolynomial(f) - delta_poly(f, i, j), y = x;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t m = 0; m < n; ++m) {
            x += (a(l, k) * a(m, j)).scaled(einv(i, k) * e(l, m));
            y += (a(i, k) * a(m, l)).scaled(einv(k, l) * e(m, j));
          }
      left.push_back(x);
      right.push_back(y);
    }
  h.relations = left;
  h.relations.insert(h.relations.end(), right.begin(), right.end());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      h.delta.push_back(matrix_coproduct(f, 0, n, i, j));
      h.counit.push_back(i == j ? f.one() : f.zero());
      NCPolynomial s(f);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) s += a(l, k).scaled(einv(i, k) * e(l, j));
      h.antipode.push_back(s);
    }
  return complete_to_cap(std::move(h), opt);
}

Matrix standard_q_matrix(const Scalar& q) {
  const Field f = q.field();
  if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
  Matrix e(f, 2, 2);
  e(0, 1) = f.one();
  e(1, 0) = -q.inverse();
  return e;
}

Matrix asymmetry_from(const Matrix& e) { return e.transpose() * checked_inverse(e); }

PresentedHopf presented_z2(Field f, std::size_t cap) {
  PresentedHopf h;
  h.field = f;
  h.cap = std::max<std::size_t>(cap, 2);
  h.alphabet = {"g"};
  NCPolynomial g = NCPolynomial::letter(f, 0);
  h.relations = {g * g - NCPolynomial::constant(f.one())};
  h.delta = {NCTensor::pure(g, g)};
  h.counit = {f.one()};
  h.antipode = {g};
  return complete_to_cap(std::move(h));
}

PresentedHopf presented_ground_field(Field f) {
  PresentedHopf h;
  h.field = f;
  h.cap = 0;
  return complete_to_cap(std::move(h));
}

PresentedHopf presented(Field f, std::vector<std::string> alphabet, std::vector<NCPolynomial> relations,
                        std::size_t cap, const CompletionOptions& opt) {
  PresentedHopf h;
  h.field = f;
  h.cap = cap;
  h.alphabet = std::move(alphabet);
  h.relations = std::move(relations);
  return complete_to_cap(std::move(h), opt);
}

PresentedHopf free_product(const PresentedHopf& h1, const PresentedHopf& h2, std::size_t cap,
                           const CompletionOptions& opt) {
  if (h1.field != h2.field) throw std::invalid_argument("free product over different fields");
  PresentedHopf h;
  h.field = h1.field;
  h.cap = cap;
  h.alphabet = h1.alphabet;
  for (std::string name : h2.alphabet) {
    while (std::find(h.alphabet.begin(), h.alphabet.end(), name) != h.alphabet.end()) name += "'";
    h.alphabet.push_back(name);
  }
  const Letter off = static_cast<Letter>(h1.size());
  h.relations = h1.relations;
  for (const auto& r : h2.relations) h.relations.push_back(shift(r, off));
  h.delta = h1.delta;
  for (const auto& t : h2.delta) h.delta.push_back(shift(t, off));
  h.counit = h1.counit;
  h.counit.insert(h.counit.end(), h2.counit.begin(), h2.counit.end());
  h.antipode = h1.antipode;
  for (const auto& s : h2.antipode) h.antipode.push_back(shift(s, off));
  return complete_to_cap(std::move(h), opt);
}

NCPolynomial GenMap::substitute(const NCPolynomial& p) const {
  const Field f = target->field;
  NCPolynomial out(f);
  for (const auto& [w, c] : p.terms()) {
    NCPolynomial t = NCPolynomial::constant(c);
    for (Letter x : w) t = t * images.at(x);
    out += t;
  }
  return out;
}

NCTensor GenMap::apply(const NCTensor& t) const {
  NCTensor out(target->field);
  for (const auto& [w, c] : t.terms())
    out += NCTensor::pure(substitute(NCPolynomial::monomial(c, w.first)), substitute(mono(source->field, w.second)));
  return normal_form(out, *target, *target);
}

MapReport verify_gen_map(const GenMap& m) {
  const PresentedHopf &s = *m.source, &t = *m.target;
  if (m.images.size() != s.size()) throw std::invalid_argument("map needs one image per generator");
  MapReport rep;
  rep.relations.resize(s.relations.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t r = 0; r < s.relations.size(); ++r) {
    NCPolynomial img = m.substitute(s.relations[r]);
    NCPolynomial res = normal_form(img, t);
    rep.relations[r] = {s.str(s.relations[r]), t.str(img), t.str(res), res.is_zero()};
  }
  std::string wd, eps, del;
  for (const auto& r : rep.relations)
    if (!r.pass) {
      wd = relation_failure(r.relation, r.residue);
      break;
    }
  for (Letter x = 0; x < s.size(); ++x) {
    if (eps.empty() && counit_of(t, m.images[x]) != s.counit[x]) eps = s.alphabet[x];
    if (del.empty() && !(normal_form(delta_of(t, m.images[x]), t, t) == m.apply(s.delta[x]))) del = s.alphabet[x];
  }
  push_check(rep.checks, "well_defined", wd);
  push_check(rep.checks, "counit", eps);
  push_check(rep.checks, "comultiplicative", del);
  return rep;
}

CheckResult composite_is_identity(const GenMap& outer, const GenMap& inner, const std::string& name) {
  const PresentedHopf& src = *inner.source;
  if (outer.target->size() != src.size()) return {name, false, "composite does not return to the source"};
  for (Letter x = 0; x < src.size(); ++x) {
    NCPolynomial back = outer.apply(inner.images[x]);
    NCPolynomial gen = NCPolynomial::letter(src.field, x);
    if (back != gen) return {name, false, src.alphabet[x] + " -> " + outer.target->str(back)};
  }
  return {name, true, ""};
}

TauAutomorphism tau_automorphism(const Matrix& e, std::size_t cap, const CompletionOptions& opt) {
  Matrix et = e.transpose(), etinv = checked_inverse(et);
  const Field f = e.field();
  const std::size_t n = e.rows();
  TauAutomorphism out;
  out.h = std::make_shared<const PresentedHopf>(universal_cosovereign(asymmetry_from(e), cap, opt));
  auto u = [&](std::size_t i, std::size_t j) { return NCPolynomial::letter(f, static_cast<Letter>(i * n + j)); };
  auto v = [&](std::size_t i, std::size_t j) { return NCPolynomial::letter(f, static_cast<Letter>(n * n + i * n + j)); };
  out.tau.source = out.tau.target = out.h;
  out.tau.images.assign(2 * n * n, NCPolynomial(f));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          out.tau.images[i * n + j] += v(k, l).scaled(etinv(i, k) * et(l, j));
          out.tau.images[n * n + i * n + j] += u(k, l).scaled(et(i, k) * etinv(l, j));
        }
  out.report = verify_gen_map(out.tau);
  out.report.checks.checks.push_back(composite_is_identity(out.tau, out.tau, "order_two"));
  return out;
}

PresentedHopf crossed_product_z2(const GenMap& tau, std::size_t cap, const CompletionOptions& opt) {
  if (tau.source != tau.target) throw std::invalid_argument("tau is not an endomorphism");
  if (!composite_is_identity(tau, tau, "order_two").pass) throw std::invalid_argument("tau does not have order 2");
  const PresentedHopf& base = *tau.source;
  const Field f = base.field;
  PresentedHopf h;
  h.field = f;
  h.cap = cap;
  h.alphabet = base.alphabet;
  std::string gname = "g";
  while (std::find(h.alphabet.begin(), h.alphabet.end(), gname) != h.alphabet.end()) gname += "'";
  h.alphabet.push_back(gname);
  const Letter gl = static_cast<Letter>(base.size());
  NCPolynomial g = NCPolynomial::letter(f, gl);
  h.relations = base.relations;
  h.relations.push_back(g * g - NCPolynomial::constant(f.one()));
  for (Letter x = 0; x < base.size(); ++x)
    h.relations.push_back(g * NCPolynomial::letter(f, x) - tau.images[x] * g);
  h.delta = base.delta;
  h.delta.push_back(NCTensor::pure(g, g));
  h.counit = base.counit;
  h.counit.push_back(f.one());
  h.antipode = base.antipode;
  h.antipode.push_back(g);
  return complete_to_cap(std::move(h), opt);
}

SmashIsoData smash_iso_data(const Matrix& e, std::size_t cap, const CompletionOptions& opt) {
  if (cap < 4) throw std::invalid_argument("cap must be at least 4");
  Matrix et = e.transpose(), etinv = checked_inverse(et);
  const Field f = e.field();
  const std::size_t n = e.rows(), nn = n * n;
  SmashIsoData d;
  d.e = e;
  d.tau = tau_automorphism(e, cap, opt);
  d.crossed = std::make_shared<const PresentedHopf>(crossed_product_z2(d.tau.tau, cap, opt));
  d.free = std::make_shared<const PresentedHopf>(
      free_product(bilinear_form_hopf(e, cap, opt), presented_z2(f, cap), cap, opt));

  auto a = [&](std::size_t i, std::size_t j) { return NCPolynomial::letter(f, static_cast<Letter>(i * n + j)); };
  NCPolynomial gb = NCPolynomial::letter(f, static_cast<Letter>(nn));
  d.forward.source = d.crossed;
  d.forward.target = d.free;
  d.forward.images.assign(2 * nn + 1, NCPolynomial(f));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d.forward.images[i * n + j] = a(i, j) * gb;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) d.forward.images[nn + i * n + j] += (gb * a(k, l)).scaled(et(i, k) * etinv(l, j));
    }
  d.forward.images[2 * nn] = gb;

  NCPolynomial gc = NCPolynomial::letter(f, static_cast<Letter>(2 * nn));
  d.backward.source = d.free;
  d.backward.target = d.crossed;
  d.backward.images.assign(nn + 1, NCPolynomial(f));
  for (std::size_t k = 0; k < nn; ++k) d.backward.images[k] = NCPolynomial::letter(f, static_cast<Letter>(k)) * gc;
  d.backward.images[nn] = gc;
  return d;
}

SmashIsoReport verify_smash_iso(const SmashIsoData& d) {
  SmashIsoReport rep;
  rep.tau = d.tau.report;
  rep.forward = verify_gen_map(d.forward);
  rep.backward = verify_gen_map(d.backward);
  auto witness = [](const CheckReport& r, std::initializer_list<const char*> names) {
    for (const char* n : names) {
      const CheckResult* c = r.find(n);
      if (!c) return std::string(n) + " missing";
      if (!c->pass) return std::string(n) + ": " + c->witness;
    }
    return std::string();
  };
  push_check(rep.checks, "tau_well_defined", witness(rep.tau.checks, {"well_defined"}));
  push_check(rep.checks, "tau_order_two", witness(rep.tau.checks, {"order_two"}));
  push_check(rep.checks, "tau_coalgebra", witness(rep.tau.checks, {"counit", "comultiplicative"}));
  push_check(rep.checks, "forward_well_defined", witness(rep.forward.checks, {"well_defined"}));
  push_check(rep.checks, "forward_coalgebra", witness(rep.forward.checks, {"counit", "comultiplicative"}));
  push_check(rep.checks, "backward_well_defined", witness(rep.backward.checks, {"well_defined"}));
  push_check(rep.checks, "backward_coalgebra", witness(rep.backward.checks, {"counit", "comultiplicative"}));
  rep.checks.checks.push_back(composite_is_identity(d.backward, d.forward, "backward_after_forward"));
  rep.checks.checks.push_back(composite_is_identity(d.forward, d.backward, "forward_after_backward"));
  return rep;
}

SmashIsoReport verify_smash_iso(const Matrix& e, std::size_t cap, const CompletionOptions& opt) {
  return verify_smash_iso(smash_iso_data(e, cap, opt));
}

GenMap bplus_projection(PresentedPtr b, PresentedPtr z2) {
  const Field f = b->field;
  const std::size_t nn = b->size();
  std::size_t n = 0;
  while (n * n < nn) ++n;
  GenMap p;
  p.source = b;
  p.target = z2;
  p.images.assign(nn, NCPolynomial(f));
  for (std::size_t i = 0; i < n; ++i) p.images[i * n + i] = NCPolynomial::letter(f, 0);
  return p;
}

std::pair<NCTensor, NCTensor> cocentral_sides(const GenMap& p, Letter x) {
  const Field f = p.source->field;
  NCTensor l(f), r(f);
  for (const auto& [w, c] : p.source->delta.at(x).terms()) {
    l += NCTensor::pure(p.substitute(NCPolynomial::monomial(c, w.first)), mono(f, w.second));
    r += NCTensor::pure(p.substitute(NCPolynomial::monomial(c, w.second)), mono(f, w.first));
  }
  return {normal_form(l, *p.target, *p.source), normal_form(r, *p.target, *p.source)};
}

BplusReport bplus_sequence_check(const Matrix& e, std::size_t cap, const CompletionOptions& opt) {
  const Field f = e.field();
  auto b = std::make_shared<const PresentedHopf>(bilinear_form_hopf(e, cap, opt));
  auto z = std::make_shared<const PresentedHopf>(presented_z2(f, cap));
  GenMap p = bplus_projection(b, z);
  BplusReport rep;
  MapReport m = verify_gen_map(p);
  rep.checks = m.checks;
  rep.relations = m.relations;

  std::string cocentral;
  for (Letter x = 0; x < b->size() && cocentral.empty(); ++x) {
    auto [l, r] = cocentral_sides(p, x);
    if (!(l == r)) cocentral = b->alphabet[x] + ": " + l.to_string(z->alphabet, b->alphabet) + " vs " +
                               r.to_string(z->alphabet, b->alphabet);
  }
  push_check(rep.checks, "cocentral", cocentral);

  std::string odd;
  for (const auto& rel : b->relations) {
    std::size_t parity = rel.is_zero() ? 0 : rel.terms().begin()->first.size() % 2;
    for (const auto& [w, c] : rel.terms())
      if (w.size() % 2 != parity) odd = b->str(rel);
    if (!odd.empty()) break;
  }
  push_check(rep.checks, "even_relations", odd);

  NCPolynomial g = NCPolynomial::letter(f, 0);
  bool hit = false;
  for (Letter x = 0; x < b->size(); ++x) hit |= p.apply(NCPolynomial::letter(f, x)) == g;
  push_check(rep.checks, "surjective", hit ? "" : "g is not attained");

  std::string unit;
  for (const auto& w : normal_words(*b, cap)) {
    if (w.size() % 2) continue;
    NCPolynomial wp = mono(f, w);
    if (p.apply(wp) != NCPolynomial::constant(counit_of(*b, wp))) {
      unit = b->str(wp);
      break;
    }
  }
  push_check(rep.checks, "even_words_to_unit", unit);
  rep.note = "exactness of the sequence (coinvariants, kernel equalities) is not decided; grading, cocentrality and "
             "well-definedness are certified up to the cap";
  return rep;
}

}  // namespace hgs
