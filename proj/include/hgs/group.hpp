#pragma once

// Finite groups given by Cayley tables, plus the builtin families used by
// the fixtures.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgs {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Group {
 public:
  Group() = default;
  /// table[i][j] = index of i*j. Throws GroupError unless the table is a
  /// group (closure, associativity, identity, inverses).
  static Group from_table(const std::vector<std::vector<std::size_t>>& table,
                          std::vector<std::string> names = {});

  /// Z_n generated by `gen`; element k is gen^k.
  static Group cyclic(std::size_t n, const std::string& gen = "g");
  /// Symmetry group of the n-gon, order 2n; element e*n+k is r^k s^e.
  static Group dihedral(std::size_t n);
  /// S_n for n <= 4, permutations in lexicographic order of their images.
  static Group symmetric(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  std::size_t identity() const { return id_; }
  std::size_t power(std::size_t a, std::size_t k) const;
  std::size_t element_order(std::size_t a) const;
  std::size_t exponent() const;
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of the element with the given name; throws when absent.
  std::size_t find(const std::string& name) const;
  bool is_abelian() const;

  /// Sorted element list of the subgroup generated by `gens`.
  std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t>& gens) const;
  bool is_normal(const std::vector<std::size_t>& subgroup) const;
  /// Minimal generating set found greedily (ascending index order).
  std::vector<std::size_t> generators() const;

 private:
  std::size_t n_ = 0, id_ = 0;
  std::vector<std::size_t> table_, inv_;
  std::vector<std::string> names_;
};

/// True iff images[g] defines a homomorphism G -> H.
bool is_homomorphism(const Group& g, const Group& h, const std::vector<std::size_t>& images);

/// A subgroup as its own group (the inclusion is `elements`).
struct Subgroup {
  Group group;
  std::vector<std::size_t> elements;   // index in the subgroup -> index in G
};
Subgroup make_subgroup(const Group& g, const std::vector<std::size_t>& elements);

struct QuotientGroup {
  Group group;
  std::vector<std::size_t> projection;  // G -> G/N
};
/// G/N for a normal subgroup N; cosets are ordered by their least element.
QuotientGroup quotient_group(const Group& g, const std::vector<std::size_t>& normal);

}  // namespace hgs
