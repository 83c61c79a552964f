#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grouplat/permutation.hpp"
#include "grouplat/poset.hpp"

namespace grouplat {

using GroupElement = std::uint32_t;
using SubgroupId = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 400;

// Permutation group with every element materialized. Elements are sorted
// lexicographically by image array, so the identity is element 0 and a
// coset's smallest index is a canonical representative.
class PermGroup {
public:
  // Breadth-first closure. Throws OrderCapExceeded past `max_order`.
  static PermGroup from_generators(std::size_t degree, std::vector<Permutation> generators,
                                   std::size_t max_order = kDefaultMaxOrder);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<GroupElement>& generator_indices() const { return generator_indices_; }

  const Permutation& element(GroupElement x) const { return elements_[x]; }
  GroupElement identity() const { return 0; }
  GroupElement multiply(GroupElement a, GroupElement b) const { return table_[a * order() + b]; }
  GroupElement inverse(GroupElement a) const { return inverse_[a]; }
  std::size_t element_order(GroupElement a) const { return elements_[a].order(); }
  std::optional<GroupElement> index_of(const Permutation& p) const;

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<GroupElement> generator_indices_;
  std::vector<Permutation> elements_;
  std::vector<GroupElement> table_;
  std::vector<GroupElement> inverse_;
};

// Named groups shipped with the library: S3, Z6, Z12, D8, Q8, S4, A4, A5,
// PSL27, Z2^3, plus any Z<n> and D<2n>.
PermGroup catalog_group(const std::string& name, std::size_t max_order = kDefaultMaxOrder);
std::vector<std::string> catalog_names();

struct Subgroup {
  Bits elements;
  std::size_t order = 0;
  std::vector<GroupElement> generators;
  std::uint32_t conjugacy_class = 0;
};

// Every subgroup of a group exactly once, ordered by (order, elements).
class SubgroupTable {
public:
  // Cyclic seeds closed under joins with cyclic subgroups. Throws
  // OrderCapExceeded when |G| > max_order.
  static SubgroupTable enumerate(const PermGroup& g, std::size_t max_order = kDefaultMaxOrder);

  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& operator[](SubgroupId id) const { return subgroups_[id]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  std::size_t group_order() const { return group_order_; }
  const PermGroup& group() const { return group_; }

  SubgroupId trivial() const { return 0; }
  SubgroupId whole() const { return static_cast<SubgroupId>(subgroups_.size() - 1); }

  std::optional<SubgroupId> find(const Bits& elements) const;
  bool contains(SubgroupId big, SubgroupId small) const;
  SubgroupId intersection(SubgroupId a, SubgroupId b) const;
  SubgroupId join(SubgroupId a, SubgroupId b) const;

  // Subgroups K <= h, ascending.
  std::vector<SubgroupId> subgroups_of(SubgroupId h) const;

  const std::vector<std::vector<SubgroupId>>& classes() const { return classes_; }
  const std::vector<SubgroupId>& class_of(SubgroupId h) const {
    return classes_[subgroups_[h].conjugacy_class];
  }

  // Isomorphism-type name recognized from order and element-order
  // statistics ("Z4", "V4", "A4", "S4", "F21", ...), or "G<order>".
  const std::string& type_name(SubgroupId h) const { return type_names_[h]; }

  bool intersection_closed() const;

private:
  static std::string key(const Bits& b);

  PermGroup group_;
  std::size_t group_order_ = 0;
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<SubgroupId>> classes_;
  std::vector<std::string> type_names_;
  std::vector<Bits> contains_;  // contains_[a].test(b): b <= a
  std::unordered_map<std::string, SubgroupId> index_;
};

// Closure of a set of generators under multiplication.
Bits generate_subgroup(const PermGroup& g, const std::vector<GroupElement>& generators);

}  // namespace grouplat
