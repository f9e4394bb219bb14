#include <stdexcept>

#include "hgs/homology.hpp"

namespace hgs {

namespace {

// Dickson: in characteristic 0 the radical is the kernel of (x, y) -> Tr(L_xy).
Subspace trace_form_kernel(const FinDimAlgebra& d) {
  const std::size_t n = d.dim;
  Vec tau = zero_vec(d.field, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [r, c] : d.mult[k * n + j])
        if (r == j) tau[k] += c;
  Matrix g(d.field, n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (const auto& [k, c] : d.mult[s * n + t]) g(s, t) += c * tau[k];
  return kernel(g);
}

using IntMat = std::vector<std::uint64_t>;  // row-major N x N

IntMat mat_mul_mod(const IntMat& a, const IntMat& b, std::size_t n, std::uint64_t q) {
  IntMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t x = a[i * n + k];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += x * b[k * n + j];
      if ((k & 63) == 63)
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] %= q;
    }
  for (auto& x : c) x %= q;
  return c;
}

// (Tr(X^{p^i}) mod p^{i+1}) / p^i for the entrywise lift X of m
std::uint64_t generalized_trace(IntMat m, std::size_t n, std::uint64_t p, std::size_t i) {
  std::uint64_t pi = 1;
  for (std::size_t t = 0; t < i; ++t) pi *= p;
  const std::uint64_t q = pi * p;
  IntMat result(n * n, 0);
  for (std::size_t r = 0; r < n; ++r) result[r * n + r] = 1;
  std::uint64_t e = pi;
  while (e) {
    if (e & 1) result = mat_mul_mod(result, m, n, q);
    e >>= 1;
    if (e) m = mat_mul_mod(m, m, n, q);
  }
  std::uint64_t tr = 0;
  for (std::size_t r = 0; r < n; ++r) tr = (tr + result[r * n + r]) % q;
  if (tr % pi) throw std::logic_error("generalized trace is not divisible by p^i");
  return (tr / pi) % p;
}

// Characteristic p: restrict scalars to F_p and run the iterated trace
// filtration I_0 > I_1 > ... > I_l with l = floor(log_p N).
Subspace iterated_trace_radical(const FinDimAlgebra& d) {
  const Field f = d.field;
  const std::uint64_t p = f.characteristic();
  const std::size_t m = f.degree(), n = d.dim, big = n * m;
  const Field fp = Field::prime(p);

  std::vector<Scalar> wpow(2 * m, f.one());
  for (std::size_t e = 1; e < 2 * m; ++e) wpow[e] = wpow[e - 1] * (m > 1 ? f.generator() : f.one());
  auto coords = [&](const Scalar& z) {
    std::vector<std::uint64_t> out(m, 0);
    auto c = z.coordinates();
    for (std::size_t g = 0; g < c.size() && g < m; ++g) out[g] = c[g].get_num().get_ui() % p;
    return out;
  };

  // left multiplication by w^e b_k over F_p, index s = k*m + e
  std::vector<IntMat> left(big, IntMat(big * big, 0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [l, c] : d.mult[k * n + j])
        for (std::size_t e = 0; e < m; ++e)
          for (std::size_t h = 0; h < m; ++h) {
            auto z = coords(c * wpow[e + h]);
            for (std::size_t g = 0; g < m; ++g)
              if (z[g]) {
                auto& x = left[k * m + e][(l * m + g) * big + (j * m + h)];
                x = (x + z[g]) % p;
              }
          }
  auto matrix_of = [&](const Vec& x) {
    IntMat out(big * big, 0);
    for (std::size_t s = 0; s < big; ++s) {
      std::uint64_t c = x[s].code();
      if (!c) continue;
      for (std::size_t t = 0; t < big * big; ++t) out[t] = (out[t] + c * left[s][t]) % p;
    }
    return out;
  };

  std::size_t l = 0;
  for (std::uint64_t pw = p; pw <= big; pw *= p) ++l;

  Subspace ideal = Subspace::whole(fp, big);
  for (std::size_t i = 0; i <= l && ideal.dim() > 0; ++i) {
    const auto& basis = ideal.basis();
    const std::size_t u = basis.size();
    std::vector<IntMat> mats(u);
    std::vector<std::uint64_t> gv(u);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t w = 0; w < u; ++w) {
      mats[w] = matrix_of(basis[w]);
      gv[w] = generalized_trace(mats[w], big, p, i);
    }
    // G[t][w] = g_i(b_w y_t); b_w y_t is column t of the matrix of b_w
    Matrix g(fp, big, u);
    for (std::size_t w = 0; w < u; ++w)
      for (std::size_t t = 0; t < big; ++t) {
        std::uint64_t acc = 0;
        for (std::size_t v = 0; v < u; ++v) acc += mats[w][ideal.pivots()[v] * big + t] * gv[v];
        g(t, w) = fp.from_code(acc % p);
      }
    std::vector<Vec> next;
    for (const auto& lam : kernel(g).basis()) {
      Vec x = zero_vec(fp, big);
      for (std::size_t w = 0; w < u; ++w)
        if (!lam[w].is_zero()) axpy(x, lam[w], basis[w]);
      next.push_back(std::move(x));
    }
    ideal = Subspace(fp, big, next);
  }

  std::vector<Vec> out;
  for (const auto& x : ideal.basis()) {
    Vec y = zero_vec(f, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t e = 0; e < m; ++e)
        if (!x[k * m + e].is_zero()) y[k] += f.from_int(static_cast<long>(x[k * m + e].code())) * wpow[e];
    out.push_back(std::move(y));
  }
  Subspace rad(f, n, out);
  if (rad.dim() * m != ideal.dim()) throw std::logic_error("radical over the prime field is not a subspace over k");
  return rad;
}

Subspace raw_radical(const FinDimAlgebra& d) {
  if (d.field.data() == nullptr) throw std::invalid_argument("unsupported field");
  return d.field.characteristic() == 0 ? trace_form_kernel(d) : iterated_trace_radical(d);
}

Subspace product_space(const FinDimAlgebra& d, const Subspace& x, const Subspace& y) {
  std::vector<Vec> span;
  for (const auto& a : x.basis())
    for (const auto& b : y.basis()) span.push_back(d.mul(a, b));
  return Subspace(d.field, d.dim, span);
}

}  // namespace

FinDimAlgebra quotient_algebra(const FinDimAlgebra& d, const Subspace& ideal) {
  Matrix proj = quotient_projection(ideal);
  auto reps = quotient_representatives(ideal);
  const std::size_t q = reps.size(), n = d.dim;
  FinDimAlgebra out{d.field, q, {}, proj.apply(d.unit)};
  out.mult.reserve(q * q);
  for (std::size_t u = 0; u < q; ++u)
    for (std::size_t v = 0; v < q; ++v) {
      Vec prod = zero_vec(d.field, n);
      add_sparse(prod, d.field.one(), d.mult[reps[u] * n + reps[v]]);
      out.mult.push_back(to_sparse(proj.apply(prod)));
    }
  return out;
}

Subspace radical(const FinDimAlgebra& d) {
  Subspace rad = raw_radical(d);
  const std::size_t n = d.dim;
  for (const auto& r : rad.basis())
    for (std::size_t k = 0; k < n; ++k) {
      Vec b = unit_vec(d.field, n, k);
      if (!rad.contains(d.mul(r, b)) || !rad.contains(d.mul(b, r)))
        throw std::logic_error("radical is not a two-sided ideal");
    }
  Subspace power = rad;
  for (std::size_t m = 1; power.dim() > 0; ++m) {
    if (m > n) throw std::logic_error("radical is not nilpotent");
    power = product_space(d, power, rad);
  }
  if (rad.dim() > 0 && raw_radical(quotient_algebra(d, rad)).dim() != 0)
    throw std::logic_error("quotient by the radical is not semisimple");
  return rad;
}

}  // namespace hgs
