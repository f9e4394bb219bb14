#pragma once

// Presented Hopf algebras handled through degree-capped noncommutative
// rewriting: H(F), B(E), free products with kZ2 and crossed products.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hgs/algebra.hpp"
#include "hgs/linalg.hpp"

namespace hgs {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Degree first, then lexicographic in the letter order.
bool deglex_less(const Word& a, const Word& b);
struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
};
struct WordHash {
  std::size_t operator()(const Word& w) const;
};

std::string word_to_string(const Word& w, const std::vector<std::string>& alphabet);

class NCPolynomial {
 public:
  using Terms = std::map<Word, Scalar, DeglexLess>;

  NCPolynomial() = default;
  explicit NCPolynomial(Field f) : f_(f) {}
  static NCPolynomial constant(const Scalar& c);
  static NCPolynomial monomial(const Scalar& c, Word w);
  static NCPolynomial letter(Field f, Letter x) { return monomial(f.one(), {x}); }

  Field field() const { return f_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const Scalar& leading_coeff() const { return terms_.rbegin()->second; }
  Scalar coeff(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);
  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  NCPolynomial operator+(const NCPolynomial& o) const;
  NCPolynomial operator-(const NCPolynomial& o) const;
  NCPolynomial operator*(const NCPolynomial& o) const;
  NCPolynomial scaled(const Scalar& c) const;

  std::string to_string(const std::vector<std::string>& alphabet) const;

  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCPolynomial& a, const NCPolynomial& b) { return !(a == b); }

 private:
  Field f_;
  Terms terms_;
};

/// Element of A (x) B: pairs of words.
class NCTensor {
 public:
  using Terms = std::map<std::pair<Word, Word>, Scalar>;

  NCTensor() = default;
  explicit NCTensor(Field f) : f_(f) {}
  static NCTensor pure(const NCPolynomial& x, const NCPolynomial& y);

  Field field() const { return f_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& l, const Word& r, const Scalar& c);
  NCTensor& operator+=(const NCTensor& o);
  NCTensor operator-(const NCTensor& o) const;
  NCTensor operator*(const NCTensor& o) const;

  std::string to_string(const std::vector<std::string>& left, const std::vector<std::string>& right) const;

  friend bool operator==(const NCTensor& a, const NCTensor& b) { return a.terms_ == b.terms_; }

 private:
  Field f_;
  Terms terms_;
};

class CompletionError : public std::runtime_error {
 public:
  CompletionError(const std::string& what, std::size_t rules, std::size_t overlaps)
      : std::runtime_error(what), rules(rules), overlaps(overlaps) {}
  std::size_t rules, overlaps;
};

class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RewriteRule {
  Word lead;
  NCPolynomial tail;  // lead -> tail
};

struct CompletionCertificate {
  std::size_t cap = 0;
  std::size_t overlaps_checked = 0;
  std::size_t rule_count = 0;
  std::string presentation_hash;
  std::string checksum;
  bool from_cache = false;
};

/// Rules closed under overlap resolution for overlap words up to `cap`.
class RewriteSystem {
 public:
  RewriteSystem(Field f, std::vector<RewriteRule> rules, CompletionCertificate cert);

  Field field() const { return f_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const CompletionCertificate& certificate() const { return cert_; }
  bool is_normal(const Word& w) const;
  NCPolynomial reduce(NCPolynomial p) const;

 private:
  // index of a rule whose lead occurs in w, with its offset
  std::optional<std::pair<std::size_t, std::size_t>> find(const Word& w) const;
  Field f_;
  std::vector<RewriteRule> rules_;
  CompletionCertificate cert_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::vector<std::size_t> lengths_;
};

std::string rules_checksum(const std::vector<RewriteRule>& rules);

struct PresentedHopf {
  Field field;
  std::vector<std::string> alphabet;
  std::vector<NCPolynomial> relations;
  std::vector<NCTensor> delta;
  std::vector<Scalar> counit;
  std::vector<NCPolynomial> antipode;
  std::size_t cap = 3;
  std::shared_ptr<const RewriteSystem> rules;

  std::size_t size() const { return alphabet.size(); }
  Letter index(const std::string& name) const;
  NCPolynomial gen(const std::string& name) const { return NCPolynomial::letter(field, index(name)); }
  NCPolynomial one() const { return NCPolynomial::constant(field.one()); }
  std::string str(const NCPolynomial& p) const { return p.to_string(alphabet); }
  std::string str(const NCTensor& t) const { return t.to_string(alphabet, alphabet); }
};
using PresentedPtr = std::shared_ptr<const PresentedHopf>;

struct CompletionOptions {
  std::size_t max_rules = 20000;
  /// Empty: take HOPFGS_CACHE_DIR from the environment; no caching if unset.
  std::string cache_dir;
  bool use_cache = true;
};

std::string presentation_hash(const PresentedHopf& h);
/// Truncated overlap completion under deglex. Throws CompletionError when
/// the rule count passes the limit.
PresentedHopf complete_to_cap(PresentedHopf h, const CompletionOptions& opt = {});

/// Throws DegreeError above the cap, std::logic_error before completion.
NCPolynomial normal_form(const NCPolynomial& p, const PresentedHopf& h);
NCTensor normal_form(const NCTensor& t, const PresentedHopf& left, const PresentedHopf& right);

std::vector<Word> normal_words(const PresentedHopf& h, std::size_t max_length);
/// Number of normal words of length <= d for d = 0..max_length.
std::vector<std::size_t> filtration_dims(const PresentedHopf& h, std::size_t max_length);

/// Structure maps extended to polynomials: Delta and epsilon multiplicatively,
/// S anti-multiplicatively. No reduction is applied.
NCTensor delta_of(const PresentedHopf& h, const NCPolynomial& p);
Scalar counit_of(const PresentedHopf& h, const NCPolynomial& p);
NCPolynomial antipode_of(const PresentedHopf& h, const NCPolynomial& p);

/// Entries: delta_well_defined, counit_well_defined, antipode_well_defined,
/// counit_axiom, antipode_identity. Witnesses name the relation or generator.
CheckReport hopf_axiom_check_to_cap(const PresentedHopf& h);

std::string letter_name(const std::string& base, std::size_t i, std::size_t j, std::size_t n);

/// H(F): u_ij, v_ij with uv^t = v^tu = 1 and vFu^tF^-1 = Fu^tF^-1v = 1.
PresentedHopf universal_cosovereign(const Matrix& f, std::size_t cap = 3, const CompletionOptions& opt = {});
/// B(E): a_ij with E^-1 a^t E a = 1 = a E^-1 a^t E.
PresentedHopf bilinear_form_hopf(const Matrix& e, std::size_t cap = 3, const CompletionOptions& opt = {});
/// [[0, 1], [-1/q, 0]]
Matrix standard_q_matrix(const Scalar& q);
/// F = E^t E^-1
Matrix asymmetry_from(const Matrix& e);
/// kZ2 as <g | g^2 = 1>.
PresentedHopf presented_z2(Field f, std::size_t cap = 3);
/// The ground field: no generators.
PresentedHopf presented_ground_field(Field f);
/// Any presentation with the given relations; Delta, epsilon and S supplied by the caller.
PresentedHopf presented(Field f, std::vector<std::string> alphabet, std::vector<NCPolynomial> relations,
                        std::size_t cap, const CompletionOptions& opt = {});

/// Second alphabet renamed with primes where it clashes with the first.
PresentedHopf free_product(const PresentedHopf& h1, const PresentedHopf& h2, std::size_t cap,
                           const CompletionOptions& opt = {});

struct GenMap {
  PresentedPtr source, target;
  std::vector<NCPolynomial> images;  // one per source generator, in target letters

  /// Substitution, not reduced.
  NCPolynomial substitute(const NCPolynomial& p) const;
  NCPolynomial apply(const NCPolynomial& p) const { return normal_form(substitute(p), *target); }
  NCTensor apply(const NCTensor& t) const;
};

struct RelationCheck {
  std::string relation, image, residue;
  bool pass = false;
};

struct MapReport {
  CheckReport checks;  // well_defined, counit, comultiplicative
  std::vector<RelationCheck> relations;
  bool all_pass() const { return checks.all_pass(); }
};

MapReport verify_gen_map(const GenMap& f);
/// f(g(x)) reduced, for every generator x of g's source.
CheckResult composite_is_identity(const GenMap& outer, const GenMap& inner, const std::string& name);

struct TauAutomorphism {
  PresentedPtr h;  // H(E^t E^-1)
  GenMap tau;
  MapReport report;  // also carries order_two
};
/// tau(u) = (E^t)^-1 v E^t, tau(v) = E^t u (E^t)^-1
TauAutomorphism tau_automorphism(const Matrix& e, std::size_t cap = 3, const CompletionOptions& opt = {});

/// H plus g with g^2 = 1 and g x = tau(x) g. Throws std::invalid_argument
/// unless tau is an endomorphism of H with tau^2 = id on generators.
PresentedHopf crossed_product_z2(const GenMap& tau, std::size_t cap, const CompletionOptions& opt = {});

struct SmashIsoData {
  Matrix e;
  TauAutomorphism tau;
  PresentedPtr crossed, free;
  GenMap forward;   // u, v, g -> ag, E^t g a (E^t)^-1, g
  GenMap backward;  // a, g -> ug, g
};
SmashIsoData smash_iso_data(const Matrix& e, std::size_t cap = 4, const CompletionOptions& opt = {});

struct SmashIsoReport {
  /// tau_well_defined, tau_order_two, tau_coalgebra, forward_well_defined,
  /// forward_coalgebra, backward_well_defined, backward_coalgebra,
  /// backward_after_forward, forward_after_backward
  CheckReport checks;
  MapReport tau, forward, backward;
  bool all_pass() const { return checks.all_pass(); }
};
SmashIsoReport verify_smash_iso(const SmashIsoData& d);
/// Throws std::invalid_argument for cap < 4 or singular E.
SmashIsoReport verify_smash_iso(const Matrix& e, std::size_t cap = 4, const CompletionOptions& opt = {});

struct BplusReport {
  /// well_defined, counit, comultiplicative, cocentral, even_relations,
  /// surjective, even_words_to_unit
  CheckReport checks;
  std::vector<RelationCheck> relations;
  std::string note;
  bool all_pass() const { return checks.all_pass(); }
};
/// p : B(E) -> kZ2, a_ij -> delta_ij g
GenMap bplus_projection(PresentedPtr b, PresentedPtr z2);
/// p(x_1) (x) x_2 and p(x_2) (x) x_1 for generator x, reduced.
std::pair<NCTensor, NCTensor> cocentral_sides(const GenMap& p, Letter x);
BplusReport bplus_sequence_check(const Matrix& e, std::size_t cap = 3, const CompletionOptions& opt = {});

enum class Genericity { generic, normalizable_not_generic, not_normalizable };
std::string to_string(Genericity g);

struct GenericityResult {
  Genericity verdict = Genericity::generic;
  Rational t;
  std::vector<unsigned> orders;  // root-of-unity orders hit, when not generic
  std::string explanation;
};

/// Values t = (q + 1/q)^2 that are rational for a root of unity q of order
/// >= 3, with the orders giving each value.
std::vector<std::pair<Rational, std::vector<unsigned>>> excluded_invariants();
/// Over Q only.
GenericityResult genericity_check(const Matrix& f);
GenericityResult genericity_from_traces(const Rational& tr_f, const Rational& tr_f_inv);
/// Assumes normalizable.
GenericityResult genericity_from_invariant(const Rational& t);

}  // namespace hgs
