#include "hgs/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace hgs {

namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t p = 0;      // characteristic
  std::size_t deg = 1;      // degree over the prime field
  std::uint64_t q = 0;      // order, 0 if infinite
  bool verified = true;
  const FieldData* base = nullptr;
  std::vector<Rational> modulus;  // monic, constant term first
  std::vector<std::uint64_t> mod_res;  // modulus residues (finite ext.)
  std::vector<std::uint32_t> log_table, exp_table;
  std::string name;

  // finite-extension digit helpers
  std::vector<std::uint64_t> digits(std::uint64_t c) const {
    std::vector<std::uint64_t> d(deg);
    for (std::size_t i = 0; i < deg; ++i) {
      d[i] = c % p;
      c /= p;
    }
    return d;
  }
  std::uint64_t undigits(const std::vector<std::uint64_t>& d) const {
    std::uint64_t c = 0;
    for (std::size_t i = deg; i-- > 0;) c = c * p + d[i];
    return c;
  }

  std::uint64_t fadd(std::uint64_t a, std::uint64_t b) const {
    if (deg == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    std::uint64_t r = 0, m = 1;
    for (std::size_t i = 0; i < deg; ++i) {
      r += ((a % p + b % p) % p) * m;
      a /= p;
      b /= p;
      m *= p;
    }
    return r;
  }
  std::uint64_t fneg(std::uint64_t a) const {
    if (deg == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    std::uint64_t r = 0, m = 1;
    for (std::size_t i = 0; i < deg; ++i) {
      std::uint64_t d = a % p;
      r += ((p - d) % p) * m;
      a /= p;
      m *= p;
    }
    return r;
  }
  std::uint64_t fmul(std::uint64_t a, std::uint64_t b) const {
    if (deg == 1) return (a * b) % p;
    if (a == 0 || b == 0) return 0;
    return exp_table[(log_table[a] + log_table[b]) % (q - 1)];
  }
  std::uint64_t finv(std::uint64_t a) const {
    if (a == 0) throw FieldError("division by zero");
    if (deg == 1) {
      // extended Euclid over Z
      std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p),
                   nr = static_cast<std::int64_t>(a);
      while (nr != 0) {
        std::int64_t qq = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - qq * nt);
        std::tie(r, nr) = std::make_pair(nr, r - qq * nr);
      }
      if (t < 0) t += static_cast<std::int64_t>(p);
      return static_cast<std::uint64_t>(t);
    }
    return exp_table[(q - 1 - log_table[a]) % (q - 1)];
  }

  // raw polynomial multiplication of codes modulo the modulus (table setup)
  std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b) const {
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * deg, 0);
    for (std::size_t i = 0; i < deg; ++i)
      for (std::size_t j = 0; j < deg; ++j)
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (std::size_t k = prod.size(); k-- > deg;) {
      std::uint64_t c = prod[k];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= deg; ++i) {
        std::size_t idx = k - deg + i;
        prod[idx] = (prod[idx] + (p - c) * mod_res[i]) % p;
      }
    }
    prod.resize(deg);
    return undigits(prod);
  }
};

}  // namespace detail

using detail::FieldData;

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::string, std::unique_ptr<FieldData>>& registry() {
  static std::map<std::string, std::unique_ptr<FieldData>> r;
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_of(const Rational& r, std::uint64_t p) {
  mpz_class num = r.get_num() % static_cast<unsigned long>(p);
  if (num < 0) num += static_cast<unsigned long>(p);
  mpz_class den = r.get_den() % static_cast<unsigned long>(p);
  if (den == 0) throw FieldError("denominator divisible by the characteristic");
  mpz_class inv;
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  mpz_class res = (num * inv) % pz;
  return res.get_ui();
}

// --- rational polynomial helpers (constant term first) ---
using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly poly_mod(QPoly a, const QPoly& m) {
  trim(a);
  QPoly mm = m;
  trim(mm);
  while (a.size() >= mm.size() && !a.empty()) {
    Rational c = a.back() / mm.back();
    std::size_t shift = a.size() - mm.size();
    for (std::size_t i = 0; i < mm.size(); ++i) a[shift + i] -= c * mm[i];
    trim(a);
  }
  return a;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

QPoly poly_derivative(const QPoly& a) {
  QPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long>(i));
  trim(d);
  return d;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

bool has_rational_root(const QPoly& m) {
  // clear denominators
  mpz_class l = 1;
  for (const auto& c : m) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : m) z.push_back(c.get_num() * (l / c.get_den()));
  if (z.front() == 0) return true;
  for (const auto& a : divisors(z.front()))
    for (const auto& b : divisors(z.back()))
      for (int sgn : {1, -1}) {
        Rational r(a * sgn, b);
        r.canonicalize();
        Rational acc = 0;
        for (std::size_t i = m.size(); i-- > 0;) acc = acc * r + m[i];
        if (acc == 0) return true;
      }
  return false;
}

std::string poly_to_string(const std::vector<std::string>& coeff_str) {
  // coeff_str[i] is the canonical string of the x^i coefficient ("0" = absent)
  std::string out;
  for (std::size_t i = coeff_str.size(); i-- > 0;) {
    std::string c = coeff_str[i];
    if (c == "0") continue;
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    std::string term;
    if (i == 0) {
      term = c;
    } else {
      if (c != "1") term = c + "*";
      term += "x";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? "-" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

// Parses a polynomial in x with rational coefficients.
QPoly parse_qpoly(std::string_view s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw FieldError("empty polynomial");
  QPoly out;
  std::size_t i = 0;
  auto read_int = [&](mpz_class& v) {
    std::size_t st = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (st == i) return false;
    v = mpz_class(t.substr(st, i - st));
    return true;
  };
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      if (t[i] == '-') sign = -1;
      ++i;
    } else if (!out.empty() || i != 0) {
      throw FieldError("malformed polynomial: " + std::string(s));
    }
    Rational coef = 1;
    bool had_coef = false;
    bool paren = false;
    if (i < t.size() && t[i] == '(') {
      paren = true;
      ++i;
    }
    mpz_class num;
    if (read_int(num)) {
      had_coef = true;
      coef = num;
      if (i < t.size() && t[i] == '/') {
        ++i;
        mpz_class den;
        if (!read_int(den) || den == 0) throw FieldError("bad fraction in: " + std::string(s));
        coef = Rational(num, den);
        coef.canonicalize();
      }
    }
    if (paren) {
      if (i >= t.size() || t[i] != ')') throw FieldError("unbalanced parenthesis: " + std::string(s));
      ++i;
    }
    std::size_t exp = 0;
    if (i < t.size() && t[i] == '*') {
      if (!had_coef) throw FieldError("malformed polynomial: " + std::string(s));
      ++i;
    }
    if (i < t.size() && t[i] == 'x') {
      ++i;
      exp = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        mpz_class e;
        if (!read_int(e)) throw FieldError("bad exponent in: " + std::string(s));
        exp = e.get_ui();
      }
      if (i < t.size() && t[i] == '/') {
        ++i;
        mpz_class den;
        if (!read_int(den) || den == 0) throw FieldError("bad fraction in: " + std::string(s));
        coef /= Rational(den);
      }
    } else if (!had_coef) {
      throw FieldError("malformed polynomial: " + std::string(s));
    }
    if (out.size() <= exp) out.resize(exp + 1, Rational(0));
    out[exp] += coef * sign;
  }
  trim(out);
  return out;
}

const FieldData* intern(std::unique_ptr<FieldData> fd) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  auto it = reg.find(fd->name);
  if (it != reg.end()) return it->second.get();
  const FieldData* ptr = fd.get();
  reg.emplace(fd->name, std::move(fd));
  return ptr;
}

const FieldData* lookup(const std::string& name) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(name);
  return it == registry().end() ? nullptr : it->second.get();
}

constexpr std::uint64_t kMaxFiniteOrder = 1u << 22;

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::rationals() {
  if (auto* d = lookup("Q")) return Field(d);
  auto fd = std::make_unique<FieldData>();
  fd->kind = FieldKind::rationals;
  fd->name = "Q";
  return Field(intern(std::move(fd)));
}

Field Field::prime(std::uint64_t p) {
  std::string name = "Fp(" + std::to_string(p) + ")";
  if (auto* d = lookup(name)) return Field(d);
  if (!is_prime(p)) throw FieldError("Fp(" + std::to_string(p) + "): not a prime");
  if (p >= kMaxFiniteOrder) throw FieldError("prime too large for this workbench: " + std::to_string(p));
  auto fd = std::make_unique<FieldData>();
  fd->kind = FieldKind::prime;
  fd->p = p;
  fd->q = p;
  fd->name = name;
  return Field(intern(std::move(fd)));
}

Field Field::extension(Field base, const std::vector<Rational>& modulus_in) {
  if (!base.d_) throw FieldError("extension of an unset field");
  if (base.kind() == FieldKind::extension) throw FieldError("towers of extensions are not supported");
  std::vector<Rational> m = modulus_in;
  trim(m);
  if (m.size() < 3) throw FieldError("extension modulus must have degree >= 2");
  if (m.back() != 1) throw FieldError("extension modulus must be monic");

  const FieldData* bd = base.d_;
  std::vector<std::string> cs;
  std::vector<std::uint64_t> res;
  if (bd->kind == FieldKind::prime) {
    for (auto& c : m) {
      res.push_back(mod_of(c, bd->p));
      cs.push_back(std::to_string(res.back()));
    }
    if (res.back() != 1) throw FieldError("extension modulus must be monic");
  } else {
    for (auto& c : m) cs.push_back(c.get_str());
  }
  std::string name = bd->name + "[x]/(" + poly_to_string(cs) + ")";
  if (auto* d = lookup(name)) return Field(d);

  auto fd = std::make_unique<FieldData>();
  fd->kind = FieldKind::extension;
  fd->base = bd;
  fd->p = bd->p;
  fd->deg = m.size() - 1;
  fd->name = name;
  if (bd->kind == FieldKind::prime) {
    fd->mod_res = res;
    for (auto r : res) fd->modulus.emplace_back(static_cast<unsigned long>(r));
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < fd->deg; ++i) {
      q *= bd->p;
      if (q >= kMaxFiniteOrder) throw FieldError("field too large for this workbench: " + name);
    }
    fd->q = q;
    // root search over the base; decides irreducibility for degree <= 3
    if (fd->deg <= 3) {
      for (std::uint64_t r = 0; r < bd->p; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t i = res.size(); i-- > 0;) acc = (acc * r + res[i]) % bd->p;
        if (acc == 0) throw FieldError("modulus is reducible (root " + std::to_string(r) + "): " + name);
      }
    }
    // primitive element search; fails iff the quotient ring is not a field
    fd->exp_table.assign(q - 1, 0);
    fd->log_table.assign(q, 0);
    bool found = false;
    for (std::uint64_t cand = 2; cand < q && !found; ++cand) {
      std::uint64_t x = 1;
      std::uint64_t k = 0;
      for (; k < q - 1; ++k) {
        fd->exp_table[k] = static_cast<std::uint32_t>(x);
        x = fd->poly_mulmod(x, cand);
        if (x == 1) {
          ++k;
          break;
        }
      }
      if (k == q - 1 && x == 1) found = true;
    }
    if (!found) throw FieldError("modulus is not irreducible: " + name);
    for (std::uint64_t k = 0; k < q - 1; ++k) fd->log_table[fd->exp_table[k]] = static_cast<std::uint32_t>(k);
    fd->verified = true;
  } else {
    fd->modulus = m;
    fd->q = 0;
    QPoly g = poly_gcd(m, poly_derivative(m));
    if (g.size() > 1) throw FieldError("modulus is not squarefree: " + name);
    if (fd->deg <= 3) {
      if (has_rational_root(m)) throw FieldError("modulus has a rational root: " + name);
      fd->verified = true;
    } else {
      fd->verified = false;
    }
  }
  return Field(intern(std::move(fd)));
}

Field Field::parse(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t == "Q") return rationals();
  if (t == "Qi") return extension(rationals(), {1, 0, 1});
  if (t == "F4") return extension(prime(2), {1, 1, 1});
  if (t == "F9") return extension(prime(3), {1, 0, 1});
  if (t.size() >= 2 && t[0] == 'F' && t[1] != 'p' &&
      std::all_of(t.begin() + 1, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return prime(std::stoull(t.substr(1)));

  Field base;
  std::size_t pos = 0;
  if (t.rfind("Fp(", 0) == 0) {
    auto close = t.find(')');
    if (close == std::string::npos) throw FieldError("malformed field: " + t);
    std::string num = t.substr(3, close - 3);
    if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw FieldError("malformed field: " + t);
    base = prime(std::stoull(num));
    pos = close + 1;
  } else if (t[0] == 'Q') {
    base = rationals();
    pos = 1;
  } else {
    throw FieldError("unknown field: " + t);
  }
  if (pos == t.size()) return base;
  const std::string ext = "[x]/(";
  if (t.compare(pos, ext.size(), ext) != 0 || t.back() != ')') throw FieldError("malformed field: " + t);
  std::string poly = t.substr(pos + ext.size(), t.size() - pos - ext.size() - 1);
  return extension(base, parse_qpoly(poly));
}

FieldKind Field::kind() const { return d_->kind; }
std::uint64_t Field::characteristic() const { return d_->p; }
std::size_t Field::degree() const { return d_->deg; }
std::uint64_t Field::order() const { return d_->q; }
bool Field::irreducibility_verified() const { return d_->verified; }
Field Field::base() const { return d_->base ? Field(d_->base) : *this; }
const std::vector<Rational>& Field::modulus() const { return d_->modulus; }
std::string Field::to_string() const { return d_ ? d_->name : "<unset>"; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const { return from_rational(Rational(v)); }

Scalar Field::from_rational(const Rational& r_in) const {
  if (!d_) throw FieldError("unset field");
  Rational r = r_in;
  r.canonicalize();
  Scalar s;
  s.f_ = d_;
  switch (d_->kind) {
    case FieldKind::rationals:
      s.q_ = r;
      break;
    case FieldKind::prime:
      s.code_ = static_cast<std::uint32_t>(mod_of(r, d_->p));
      break;
    case FieldKind::extension:
      if (d_->p) {
        s.code_ = static_cast<std::uint32_t>(mod_of(r, d_->p));
      } else {
        s.poly_.assign(d_->deg, Rational(0));
        s.poly_[0] = r;
      }
      break;
  }
  return s;
}

Scalar Field::generator() const {
  if (!d_ || d_->kind != FieldKind::extension) throw FieldError("field has no adjoined generator");
  Scalar s;
  s.f_ = d_;
  if (d_->p) {
    s.code_ = static_cast<std::uint32_t>(d_->p);
  } else {
    s.poly_.assign(d_->deg, Rational(0));
    s.poly_[1] = 1;
  }
  return s;
}

Scalar Field::from_code(std::uint64_t code) const {
  if (!d_ || !d_->p) throw FieldError("from_code needs a finite field");
  if (code >= d_->q) throw FieldError("element code out of range");
  Scalar s;
  s.f_ = d_;
  s.code_ = static_cast<std::uint32_t>(code);
  return s;
}

Scalar Field::parse_element(std::string_view text) const {
  QPoly coeffs = parse_qpoly(text);
  if (d_->kind != FieldKind::extension && coeffs.size() > 1)
    throw FieldError("element '" + std::string(text) + "' uses x outside an extension field");
  Scalar acc = zero();
  Scalar xp = one();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) acc += from_rational(coeffs[i]) * xp;
    if (i + 1 < coeffs.size()) xp *= generator();
  }
  return acc;
}

// ---------------------------------------------------------------- Scalar

namespace {
void check_same(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) throw FieldError("field mismatch: " + a.field().to_string() + " vs " + b.field().to_string());
  if (!a.field().data()) throw FieldError("operation on an unset scalar");
}

std::vector<Rational> qpoly_mulmod(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                   const std::vector<Rational>& m) {
  std::size_t n = m.size() - 1;
  std::vector<Rational> prod(2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  for (std::size_t k = prod.size(); k-- > n;) {
    if (prod[k] == 0) continue;
    Rational c = prod[k];
    for (std::size_t i = 0; i <= n; ++i) prod[k - n + i] -= c * m[i];
  }
  prod.resize(n);
  return prod;
}
}  // namespace

bool Scalar::is_zero() const {
  if (!f_) return true;
  switch (f_->kind) {
    case FieldKind::rationals:
      return q_ == 0;
    case FieldKind::prime:
      return code_ == 0;
    case FieldKind::extension:
      if (f_->p) return code_ == 0;
      return std::all_of(poly_.begin(), poly_.end(), [](const Rational& r) { return r == 0; });
  }
  return false;
}

bool Scalar::is_one() const { return f_ && *this == Field(f_).one(); }

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}
Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}
Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = *this;
  r *= o;
  return r;
}
Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(*this, o);
  if (f_->p) {
    code_ = static_cast<std::uint32_t>(f_->fadd(code_, o.code_));
  } else if (f_->kind == FieldKind::rationals) {
    q_ += o.q_;
  } else {
    for (std::size_t i = 0; i < poly_.size(); ++i) poly_[i] += o.poly_[i];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(*this, o);
  if (f_->p) {
    code_ = static_cast<std::uint32_t>(f_->fadd(code_, f_->fneg(o.code_)));
  } else if (f_->kind == FieldKind::rationals) {
    q_ -= o.q_;
  } else {
    for (std::size_t i = 0; i < poly_.size(); ++i) poly_[i] -= o.poly_[i];
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(*this, o);
  if (f_->p) {
    code_ = static_cast<std::uint32_t>(f_->fmul(code_, o.code_));
  } else if (f_->kind == FieldKind::rationals) {
    q_ *= o.q_;
  } else {
    poly_ = qpoly_mulmod(poly_, o.poly_, f_->modulus);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (!f_) return r;
  if (f_->p) {
    r.code_ = static_cast<std::uint32_t>(f_->fneg(code_));
  } else if (f_->kind == FieldKind::rationals) {
    r.q_ = -q_;
  } else {
    for (auto& c : r.poly_) c = -c;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (!f_) throw FieldError("operation on an unset scalar");
  if (is_zero()) throw FieldError("division by zero");
  Scalar r = *this;
  if (f_->p) {
    r.code_ = static_cast<std::uint32_t>(f_->finv(code_));
  } else if (f_->kind == FieldKind::rationals) {
    r.q_ = 1 / q_;
  } else {
    // extended Euclid in Q[x]: find s with s*a = 1 mod m
    QPoly a = poly_;
    trim(a);
    QPoly m = f_->modulus;
    QPoly s0{Rational(0)}, s1{Rational(1)};
    QPoly r0 = m, r1 = a;
    while (!(r1.size() == 1)) {
      if (r1.empty()) throw FieldError("element not invertible (modulus reducible?)");
      // quotient of r0 by r1
      QPoly quo(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rational(0));
      QPoly rem = r0;
      while (rem.size() >= r1.size() && !rem.empty()) {
        Rational c = rem.back() / r1.back();
        std::size_t sh = rem.size() - r1.size();
        quo[sh] += c;
        for (std::size_t i = 0; i < r1.size(); ++i) rem[sh + i] -= c * r1[i];
        trim(rem);
      }
      // s2 = s0 - quo*s1
      QPoly prod(quo.size() + s1.size(), Rational(0));
      for (std::size_t i = 0; i < quo.size(); ++i)
        for (std::size_t j = 0; j < s1.size(); ++j) prod[i + j] += quo[i] * s1[j];
      QPoly s2 = s0;
      if (s2.size() < prod.size()) s2.resize(prod.size(), Rational(0));
      for (std::size_t i = 0; i < prod.size(); ++i) s2[i] -= prod[i];
      trim(s2);
      s0 = std::move(s1);
      s1 = std::move(s2);
      r0 = std::move(r1);
      r1 = std::move(rem);
    }
    Rational c = r1[0];
    QPoly inv = poly_mod(s1, m);
    for (auto& x : inv) x /= c;
    inv.resize(f_->deg, Rational(0));
    r.poly_ = inv;
  }
  return r;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = Field(f_).one();
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::vector<Rational> Scalar::coordinates() const {
  if (!f_) return {};
  if (f_->kind == FieldKind::rationals) return {q_};
  if (!f_->p) return poly_;
  std::vector<Rational> out;
  std::uint64_t c = code_;
  for (std::size_t i = 0; i < f_->deg; ++i) {
    out.emplace_back(static_cast<unsigned long>(c % f_->p));
    c /= f_->p;
  }
  return out;
}

std::string Scalar::to_string() const {
  if (!f_) return "<unset>";
  if (f_->kind == FieldKind::rationals) return q_.get_str();
  if (f_->kind == FieldKind::prime) return std::to_string(code_);
  std::vector<std::string> cs;
  for (const auto& c : coordinates()) cs.push_back(c.get_str());
  return poly_to_string(cs);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.f_ != b.f_) return false;
  if (!a.f_) return true;
  if (a.f_->p) return a.code_ == b.code_;
  if (a.f_->kind == FieldKind::rationals) return a.q_ == b.q_;
  return a.poly_ == b.poly_;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (a.f_->p) return a.code_ < b.code_;
  if (a.f_->kind == FieldKind::rationals) return a.q_ < b.q_;
  // highest coefficient first so that the embedded base field keeps its order
  for (std::size_t i = a.poly_.size(); i-- > 0;) {
    if (a.poly_[i] != b.poly_[i]) return a.poly_[i] < b.poly_[i];
  }
  return false;
}

// ---------------------------------------------------------------- roots of unity

namespace {

bool rational_sqrt(const Rational& r, Rational& out) {
  if (r < 0) return false;
  mpz_class n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  out = Rational(sn, sd);
  out.canonicalize();
  return true;
}

// Square roots of a rational number inside a quadratic field Q[x]/(x^2 - s x - t).
std::vector<Scalar> sqrt_in_quadratic(Field f, const Rational& r) {
  std::vector<Scalar> out;
  const auto& m = f.modulus();  // m = x^2 + m1 x + m0  =>  s = -m1, t = -m0
  Rational s = -m[1], t = -m[0];
  Rational u;
  if (rational_sqrt(r, u)) {
    out.push_back(f.from_rational(u));
    out.push_back(f.from_rational(-u));
  }
  Rational denom = t + s * s / 4;
  if (denom != 0) {
    Rational v2 = r / denom, v;
    if (rational_sqrt(v2, v) && v != 0) {
      for (int sg : {1, -1}) {
        Rational vv = v * sg;
        Scalar cand = f.from_rational(-s * vv / 2) + f.from_rational(vv) * f.generator();
        if (cand * cand == f.from_rational(r)) out.push_back(cand);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Scalar> nth_roots_of_unity(Field f, std::uint64_t n) {
  if (n == 0) throw FieldError("n must be positive");
  std::vector<Scalar> out;
  const Scalar one = f.one();
  if (f.is_finite()) {
    for (std::uint64_t c = 1; c < f.order(); ++c) {
      Scalar z = f.from_code(c);
      if (z.pow(n) == one) out.push_back(z);
    }
  } else {
    std::vector<Scalar> cands{one, -one};
    if (f.kind() == FieldKind::extension && f.degree() == 2) {
      // roots of the cyclotomic polynomials of degree 2: z^2 + b z + c
      const std::pair<long, long> cyclo[] = {{1, 1}, {0, 1}, {-1, 1}};  // orders 3, 4, 6
      for (auto [b, c] : cyclo) {
        Rational disc = Rational(b * b - 4 * c);
        for (const auto& sq : sqrt_in_quadratic(f, disc))
          cands.push_back((f.from_int(-b) + sq) * f.from_rational(Rational(1, 2)));
      }
    }
    for (const auto& z : cands)
      if (z.pow(n) == one && std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::uint64_t multiplicative_order(const Scalar& x) {
  if (x.is_zero()) throw FieldError("zero has no multiplicative order");
  Field f = x.field();
  const Scalar one = f.one();
  std::uint64_t bound = f.is_finite() ? f.order() - 1 : 2 * f.degree() * f.degree() + 6;
  Scalar acc = x;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (acc == one) return k;
    acc *= x;
  }
  return 0;
}

}  // namespace hgs
