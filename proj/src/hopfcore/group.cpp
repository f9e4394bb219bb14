#include "hgs/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hgs {

Group Group::from_table(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> names) {
  Group g;
  g.n_ = table.size();
  if (g.n_ == 0) throw GroupError("empty Cayley table");
  g.table_.reserve(g.n_ * g.n_);
  for (const auto& row : table) {
    if (row.size() != g.n_) throw GroupError("Cayley table is not square");
    for (auto x : row) {
      if (x >= g.n_) throw GroupError("Cayley table entry out of range");
      g.table_.push_back(x);
    }
  }
  const std::size_t n = g.n_;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw GroupError("Cayley table is not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                           "," + std::to_string(c) + ")");
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.id_ = e;
      found = true;
    }
  }
  if (!found) throw GroupError("Cayley table has no identity");
  g.inv_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.mul(a, b) == g.id_ && g.mul(b, a) == g.id_) g.inv_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (g.inv_[a] == n) throw GroupError("element " + std::to_string(a) + " has no inverse");
  if (names.empty()) {
    for (std::size_t a = 0; a < n; ++a) names.push_back(a == g.id_ ? "e" : "x" + std::to_string(a));
  }
  if (names.size() != n) throw GroupError("wrong number of element names");
  g.names_ = std::move(names);
  return g;
}

Group Group::cyclic(std::size_t n, const std::string& gen) {
  if (n == 0 || n > 24) throw GroupError("cyclic group order must be in 1..24");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    names.push_back(a == 0 ? "e" : a == 1 ? gen : gen + "^" + std::to_string(a));
  }
  return from_table(t, names);
}

Group Group::dihedral(std::size_t n) {
  if (n < 2 || 2 * n > 24) throw GroupError("dihedral group needs 2 <= n <= 12");
  // r^k s^e * r^l s^f = r^(k + (-1)^e l) s^(e+f)
  auto idx = [n](std::size_t k, std::size_t e) { return e * n + k; };
  std::vector<std::vector<std::size_t>> t(2 * n, std::vector<std::size_t>(2 * n));
  std::vector<std::string> names(2 * n);
  for (std::size_t e = 0; e < 2; ++e)
    for (std::size_t k = 0; k < n; ++k) {
      std::string r = k == 0 ? "" : k == 1 ? "r" : "r^" + std::to_string(k);
      names[idx(k, e)] = e == 0 ? (k == 0 ? "e" : r) : (k == 0 ? "s" : r + "s");
      for (std::size_t f = 0; f < 2; ++f)
        for (std::size_t l = 0; l < n; ++l) {
          std::size_t kk = e == 0 ? (k + l) % n : (k + n - l) % n;
          t[idx(k, e)][idx(l, f)] = idx(kk, (e + f) % 2);
        }
    }
  return from_table(t, names);
}

namespace {
std::string cycle_name(const std::vector<std::size_t>& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}
}  // namespace

Group Group::symmetric(std::size_t n) {
  if (n == 0 || n > 4) throw GroupError("symmetric group supported for n <= 4");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  // (a*b)(x) = a(b(x))
  std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    names.push_back(cycle_name(perms[a]));
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(c);
    }
  }
  return from_table(t, names);
}

std::size_t Group::power(std::size_t a, std::size_t k) const {
  std::size_t r = id_;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t Group::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != id_; x = mul(x, a)) ++k;
  return k;
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::size_t Group::find(const std::string& name) const {
  for (std::size_t a = 0; a < n_; ++a)
    if (names_[a] == name) return a;
  throw GroupError("no group element named " + name);
}

bool Group::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::size_t> Group::generated_subgroup(const std::vector<std::size_t>& gens) const {
  std::set<std::size_t> s{id_};
  std::vector<std::size_t> frontier{id_};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto x : frontier)
      for (auto g : gens) {
        auto y = mul(x, g);
        if (s.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {s.begin(), s.end()};
}

bool Group::is_normal(const std::vector<std::size_t>& sub) const {
  std::set<std::size_t> s(sub.begin(), sub.end());
  for (std::size_t g = 0; g < n_; ++g)
    for (auto x : sub)
      if (!s.count(mul(mul(g, x), inv_[g]))) return false;
  return true;
}

std::vector<std::size_t> Group::generators() const {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> cur{id_};
  for (std::size_t a = 0; a < n_ && cur.size() < n_; ++a) {
    if (std::binary_search(cur.begin(), cur.end(), a)) continue;
    gens.push_back(a);
    cur = generated_subgroup(gens);
  }
  return gens;
}

bool is_homomorphism(const Group& g, const Group& h, const std::vector<std::size_t>& images) {
  if (images.size() != g.order()) return false;
  for (auto x : images)
    if (x >= h.order()) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (images[g.mul(a, b)] != h.mul(images[a], images[b])) return false;
  return true;
}

Subgroup make_subgroup(const Group& g, const std::vector<std::size_t>& elements) {
  std::vector<std::size_t> els = elements;
  std::sort(els.begin(), els.end());
  els.erase(std::unique(els.begin(), els.end()), els.end());
  auto pos = [&](std::size_t x) -> std::size_t {
    auto it = std::lower_bound(els.begin(), els.end(), x);
    if (it == els.end() || *it != x) throw GroupError("subset is not closed under multiplication");
    return static_cast<std::size_t>(it - els.begin());
  };
  std::vector<std::vector<std::size_t>> t(els.size(), std::vector<std::size_t>(els.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < els.size(); ++i) {
    names.push_back(g.name(els[i]));
    for (std::size_t j = 0; j < els.size(); ++j) t[i][j] = pos(g.mul(els[i], els[j]));
  }
  return {Group::from_table(t, names), els};
}

QuotientGroup quotient_group(const Group& g, const std::vector<std::size_t>& normal) {
  if (!g.is_normal(normal)) throw GroupError("subgroup is not normal");
  const std::size_t n = g.order();
  std::vector<std::size_t> coset_of(n, n), reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (coset_of[a] != n) continue;
    for (auto x : normal) coset_of[g.mul(a, x)] = reps.size();
    reps.push_back(a);
  }
  std::vector<std::vector<std::size_t>> t(reps.size(), std::vector<std::size_t>(reps.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    names.push_back(i == 0 ? "e" : "[" + g.name(reps[i]) + "]");
    for (std::size_t j = 0; j < reps.size(); ++j) t[i][j] = coset_of[g.mul(reps[i], reps[j])];
  }
  return {Group::from_table(t, names), coset_of};
}

}  // namespace hgs
