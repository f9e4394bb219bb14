#include <map>
#include <numeric>

#include "hgs/presented.hpp"

namespace hgs {

namespace {

unsigned euler_phi(unsigned m) {
  unsigned out = 0;
  for (unsigned k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) ++out;
  return out;
}

std::string rat(const Rational& r) { return r.get_str(); }

}  // namespace

std::string to_string(Genericity g) {
  switch (g) {
    case Genericity::generic:
      return "generic";
    case Genericity::normalizable_not_generic:
      return "normalizable, not generic";
    case Genericity::not_normalizable:
      return "not normalizable";
  }
  return "";
}

std::vector<std::pair<Rational, std::vector<unsigned>>> excluded_invariants() {
  // t = (q + 1/q)^2 = 2 + z + 1/z with z = q^2. t rational forces deg q <= 4,
  // so phi(ord q) <= 4; and z + 1/z is rational only for ord z in {1,2,3,4,6}.
  const std::map<unsigned, int> rational_trace = {{1, 2}, {2, -2}, {3, -1}, {4, 0}, {6, 1}};
  std::map<Rational, std::vector<unsigned>> found;
  for (unsigned m = 3; m <= 64; ++m) {
    if (euler_phi(m) > 4) continue;
    unsigned mz = m % 2 == 0 ? m / 2 : m;
    auto it = rational_trace.find(mz);
    if (it == rational_trace.end()) continue;
    found[Rational(2 + it->second)].push_back(m);
  }
  return {found.begin(), found.end()};
}

GenericityResult genericity_from_invariant(const Rational& t) {
  GenericityResult r;
  r.t = t;
  for (const auto& [value, orders] : excluded_invariants())
    if (value == t) {
      r.verdict = Genericity::normalizable_not_generic;
      r.orders = orders;
      std::string o;
      for (std::size_t i = 0; i < orders.size(); ++i) o += (i ? " or " : "") + std::to_string(orders[i]);
      r.explanation = "not generic (order " + o + " root of unity)";
      return r;
    }
  r.verdict = Genericity::generic;
  r.explanation = "generic (t = " + rat(t) + ")";
  return r;
}

GenericityResult genericity_from_traces(const Rational& tr_f, const Rational& tr_f_inv) {
  if ((tr_f == 0) != (tr_f_inv == 0)) {
    GenericityResult r;
    r.verdict = Genericity::not_normalizable;
    r.t = tr_f * tr_f_inv;
    r.explanation = "not normalizable (tr(F) = " + rat(tr_f) + ", tr(F^-1) = " + rat(tr_f_inv) + ")";
    return r;
  }
  return genericity_from_invariant(tr_f * tr_f_inv);
}

GenericityResult genericity_check(const Matrix& f) {
  if (f.field() != Field::rationals()) throw std::invalid_argument("genericity is decided over Q only");
  if (f.rows() != f.cols() || f.rows() < 2) throw std::invalid_argument("F must be square of size at least 2");
  auto inv = inverse(f);
  if (!inv) throw std::invalid_argument("singular matrix");
  Rational a = 0, b = 0;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    a += f(i, i).coordinates()[0];
    b += (*inv)(i, i).coordinates()[0];
  }
  return genericity_from_traces(a, b);
}

}  // namespace hgs
