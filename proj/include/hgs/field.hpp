#pragma once

// Exact scalar fields: the rationals, prime fields and simple extensions
// F[x]/(m) of either.

#include <cstdint>
#include <ostream>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hgs {

using Rational = mpq_class;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind { rationals, prime, extension };

class Scalar;

namespace detail {
struct FieldData;
}

/// Handle to an interned field description. Two handles compare equal iff
/// they describe the same field; the underlying data lives for the whole
/// program, so handles and scalars are cheap to copy.
class Field {
 public:
  Field() = default;

  static Field rationals();
  static Field prime(std::uint64_t p);
  /// Simple extension base[x]/(modulus). `modulus` lists coefficients from
  /// the constant term upwards and must be monic of degree >= 2.
  static Field extension(Field base, const std::vector<Rational>& modulus);
  /// Accepts `Q`, `Fp(5)`, `Fp(2)[x]/(x^2+x+1)`, `Q[x]/(x^2+1)` and the
  /// aliases F2, F3, F4, Qi.
  static Field parse(std::string_view text);

  FieldKind kind() const;
  std::uint64_t characteristic() const;
  /// Extension degree over the prime field (1 for Q and F_p).
  std::size_t degree() const;
  /// Number of elements; 0 for characteristic-zero fields.
  std::uint64_t order() const;
  bool is_finite() const { return characteristic() != 0; }
  /// False only for characteristic-zero extensions of degree >= 4, whose
  /// irreducibility is asserted by the caller rather than verified.
  bool irreducibility_verified() const;
  /// Base field of an extension; the field itself otherwise.
  Field base() const;
  /// Modulus coefficients (constant term first); empty unless an extension.
  const std::vector<Rational>& modulus() const;

  std::string to_string() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_rational(const Rational& r) const;
  /// The adjoined root x (throws unless an extension).
  Scalar generator() const;
  /// Parses `3`, `-1/2`, `x+1`, `2*x^2-x/3` and similar.
  Scalar parse_element(std::string_view text) const;
  /// Finite fields only: element with the given integer code in [0, order).
  Scalar from_code(std::uint64_t code) const;

  friend bool operator==(Field a, Field b) { return a.d_ == b.d_; }
  friend bool operator!=(Field a, Field b) { return a.d_ != b.d_; }

  const detail::FieldData* data() const { return d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  const detail::FieldData* d_ = nullptr;
  friend class Scalar;
};

/// An element of a Field in canonical form.
class Scalar {
 public:
  Scalar() = default;

  Field field() const { return Field(f_); }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  /// Coordinates over the prime field (length = degree). Finite fields give
  /// integer residues as rationals.
  std::vector<Rational> coordinates() const;
  /// Finite fields: integer code in [0, order).
  std::uint64_t code() const { return code_; }

  std::string to_string() const;
  /// Total order used for canonical orderings (not a field order).
  friend bool canonical_less(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  friend class Field;
  friend struct detail::FieldData;
  const detail::FieldData* f_ = nullptr;
  std::uint32_t code_ = 0;       // finite fields
  Rational q_;                   // Q
  std::vector<Rational> poly_;   // characteristic-zero extensions
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
inline std::ostream& operator<<(std::ostream& os, Field f) { return os << f.to_string(); }

/// All z with z^n = 1 in the field, in canonical order. Characteristic-zero
/// extensions are supported up to degree 2.
std::vector<Scalar> nth_roots_of_unity(Field f, std::uint64_t n);

/// Multiplicative order of a nonzero element (0 when infinite).
std::uint64_t multiplicative_order(const Scalar& x);

}  // namespace hgs
