#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace camonoid {

/// Index of a group element; the identity is always 0.
using Element = std::uint32_t;

/// Largest group order the library will construct.
inline constexpr std::size_t kMaxGroupOrder = 64;
/// Default order limit for subgroup and configuration enumeration.
inline constexpr std::size_t kDefaultGroupGuard = 16;

/// A set of group elements stored as a bitset over element indices.
class Subgroup {
 public:
  constexpr Subgroup() = default;
  constexpr explicit Subgroup(std::uint64_t bits) : bits_(bits) {}

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Element g) const { return (bits_ >> g) & 1u; }
  std::size_t order() const;
  bool is_subset_of(const Subgroup& other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  std::vector<Element> members() const;

  friend constexpr bool operator==(const Subgroup&, const Subgroup&) = default;
  /// Ordered by (order, bitset value).
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  std::uint64_t bits_ = 0;
};

/// A finite group given by its Cayley table, validated on construction.
class FiniteGroup {
 public:
  /// Validates the table and re-indexes so that the identity becomes 0.
  /// Throws NotAGroup naming the first failing check.
  static FiniteGroup from_table(std::vector<std::vector<Element>> table,
                                std::string name);

  std::size_t order() const { return n_; }
  const std::string& name() const { return name_; }
  static constexpr Element identity() { return 0; }

  Element mul(Element g, Element h) const { return table_[g * n_ + h]; }
  Element inv(Element g) const { return inv_[g]; }
  bool is_abelian() const { return abelian_; }

  /// Orders of the direct factors when built from a product spec, else {n}.
  const std::vector<std::size_t>& factor_orders() const { return factors_; }
  void set_factor_orders(std::vector<std::size_t> factors) {
    factors_ = std::move(factors);
  }

  Subgroup whole() const;
  Subgroup trivial() const { return Subgroup{1}; }
  Subgroup generated(std::span<const Element> gens) const;
  /// g^{-1} H g
  Subgroup conjugate(const Subgroup& h, Element g) const;
  bool is_subgroup(const Subgroup& h) const;
  Element power(Element g, std::size_t k) const;
  std::size_t element_order(Element g) const;

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::size_t> factors_;
  std::string name_;
  bool abelian_ = true;
};

FiniteGroup cyclic_group(std::size_t n);
/// Lexicographic encoding: (a, b) has index a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Parses `family ("x" family)*` with `family = "cyclic:" int`.
FiniteGroup parse_group_spec(std::string_view spec);
/// Reads a Cayley-table document: n, then n rows of n indices; '#' lines
/// are comments.
FiniteGroup read_cayley_table(std::istream& in, std::string name);
/// Accepts either a group-spec string or a path to a Cayley-table document.
FiniteGroup load_group(const std::string& spec_or_path);

/// All subgroups sorted by (order, bitset). Throws SpaceTooLarge when the
/// group order exceeds `guard`.
std::vector<Subgroup> enumerate_subgroups(
    const FiniteGroup& g, std::size_t guard = kDefaultGroupGuard);

struct ConjClass {
  Subgroup rep;                  // member with the smallest bitset
  std::vector<Subgroup> members;
};

/// Conjugacy classes of subgroups under the order
/// [H1] <= [H2] iff H1 <= g^{-1} H2 g for some g.
struct SubgroupLattice {
  std::vector<ConjClass> classes;  // class of G first
  std::vector<char> leq;           // r x r, row-major
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // includes loops

  std::size_t size() const { return classes.size(); }
  bool le(std::size_t i, std::size_t j) const {
    return leq[i * classes.size() + j] != 0;
  }
  /// Index of the class containing h; throws std::out_of_range if none.
  std::size_t class_of(const Subgroup& h) const;
  /// Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
};

SubgroupLattice conjugacy_classes(const FiniteGroup& g,
                                  std::size_t guard = kDefaultGroupGuard);

/// Size of a smallest generating set.
std::size_t group_rank(const FiniteGroup& g);

}  // namespace camonoid
