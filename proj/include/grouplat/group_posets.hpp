#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplat/groups.hpp"
#include "grouplat/poset.hpp"

namespace grouplat {

enum class LatticeKind { Subgroups, Cosets, PuncturedCosets };

// "L", "C" or "S".
LatticeKind parse_lattice_kind(const std::string& text);
std::string to_string(LatticeKind kind);

inline constexpr std::size_t kDefaultMaxPoset = 25000;

// A poset built from a subgroup table. Element e stands for the coset
// representative[e] * subgroup[e]; for subgroup lattices the representative
// is the identity. Poset tags are subgroup ids.
struct GroupPoset {
  Poset poset;
  std::vector<SubgroupId> subgroup;
  std::vector<GroupElement> representative;
};

// Subgroups K with 1 < K < within.
GroupPoset subgroup_lattice_proper(const SubgroupTable& t, SubgroupId within);
GroupPoset subgroup_lattice_proper(const SubgroupTable& t);

// Left cosets xK with x in `within` and K a proper subgroup of `within`
// (K = 1 included unless punctured). xK < yL iff K < L and x is in yL.
// Throws OrderCapExceeded when the poset would exceed `max_elements`.
GroupPoset coset_poset(const SubgroupTable& t, SubgroupId within, bool punctured,
                       std::size_t max_elements = kDefaultMaxPoset);
GroupPoset coset_poset(const SubgroupTable& t, bool punctured,
                       std::size_t max_elements = kDefaultMaxPoset);

GroupPoset group_poset(const SubgroupTable& t, LatticeKind kind, SubgroupId within,
                       std::size_t max_elements = kDefaultMaxPoset);

// Number of elements group_poset would have, without building it.
std::size_t group_poset_size(const SubgroupTable& t, LatticeKind kind, SubgroupId within);

// Equal keys guarantee isomorphic lower fibers: the conjugacy class of the
// underlying subgroup.
std::uint32_t fiber_isomorphism_key(const SubgroupTable& t, const GroupPoset& p, Element x);

}  // namespace grouplat
