#pragma once

#include <random>

#include "hgs/field.hpp"
#include "hgs/linalg.hpp"

namespace hgs::testutil {

inline Scalar random_scalar(Field f, std::mt19937_64& rng) {
  if (f.is_finite()) return f.from_code(std::uniform_int_distribution<std::uint64_t>(0, f.order() - 1)(rng));
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  Scalar s = f.from_rational(Rational(num(rng), den(rng)));
  if (f.kind() == FieldKind::extension) {
    Scalar xp = f.one();
    for (std::size_t i = 1; i < f.degree(); ++i) {
      xp *= f.generator();
      s += f.from_rational(Rational(num(rng), den(rng))) * xp;
    }
  }
  return s;
}

inline Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng, double density = 1.0) {
  Matrix m(f, r, c);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng)) m(i, j) = random_scalar(f, rng);
  return m;
}

}  // namespace hgs::testutil
