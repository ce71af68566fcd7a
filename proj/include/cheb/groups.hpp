#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cheb {

/// Largest group order in the built-in catalog is |S5| = 120.
inline constexpr std::size_t kMaxGroupOrder = 128;

using ElementId = std::uint16_t;
using ElementSet = std::bitset<kMaxGroupOrder>;
using Permutation = std::vector<std::uint8_t>;

/// Cycle lengths of a permutation in nonincreasing order, fixed points
/// included (so the parts sum to the degree).
using CycleType = std::vector<int>;

CycleType cycle_type(const Permutation& perm);
std::string format_cycle_type(const CycleType& type);

struct ConjugacyClass {
  ElementId representative = 0;
  ElementSet members;
  std::size_t size = 0;
  int order = 1;  // common order of the members
};

/// A finite group given by its multiplication table, together with a
/// faithful permutation action (the "natural" action used to read off
/// cycle types). Immutable after construction; the group axioms are
/// checked exhaustively by the constructor.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::vector<ElementId>> table,
              std::vector<Permutation> action);

  /// Elements are the given permutations (which must be closed under
  /// composition). Ids follow lexicographic order, so the identity is 0.
  static FiniteGroup from_permutations(std::string name, std::vector<Permutation> elements);

  /// Closure of the given generators, then from_permutations.
  static FiniteGroup generated_by(std::string name, const std::vector<Permutation>& generators);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return table_.size(); }
  ElementId identity() const noexcept { return identity_; }
  ElementId mul(ElementId a, ElementId b) const { return table_[a][b]; }
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  ElementId conjugate(ElementId g, ElementId by) const;  // by * g * by^-1
  ElementId power(ElementId g, long long k) const;
  int element_order(ElementId g) const { return orders_[g]; }

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(ElementId g) const { return class_of_[g]; }
  /// Index of the class containing g^k.
  std::size_t power_class(std::size_t class_index, long long k) const;

  bool is_abelian() const;
  bool is_central(ElementId g) const;

  ElementSet all_elements() const;
  ElementSet closure(const std::vector<ElementId>& generators) const;
  ElementSet cyclic_subgroup(ElementId g) const;
  bool is_subgroup(const ElementSet& set) const;
  bool is_normal(const ElementSet& subgroup) const;
  bool is_abelian(const ElementSet& subgroup) const;

  /// Every subgroup, ordered by size and then by member bit pattern.
  std::vector<ElementSet> subgroups() const;

  std::size_t natural_degree() const noexcept { return action_.empty() ? 0 : action_[0].size(); }
  const Permutation& natural_permutation(ElementId g) const { return action_[g]; }

  /// Cycle type of g acting on itself by left multiplication.
  CycleType regular_cycle_type(ElementId g) const;

 private:
  void validate() const;
  void compute_derived();

  std::string name_;
  std::vector<std::vector<ElementId>> table_;
  std::vector<Permutation> action_;
  ElementId identity_ = 0;
  std::vector<ElementId> inverse_;
  std::vector<int> orders_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

/// Catalog: C1..C12, S1..S5, A3..A5, D4 (Klein four) and D6..D12.
/// Throws UnknownGroup otherwise.
FiniteGroup build_group(std::string_view name);

std::vector<std::string> group_catalog_names();

}  // namespace cheb
