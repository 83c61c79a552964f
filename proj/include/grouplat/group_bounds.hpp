#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grouplat/decreasing.hpp"
#include "grouplat/group_posets.hpp"
#include "grouplat/homology.hpp"
#include "grouplat/spectral.hpp"

namespace grouplat {

// One conjugacy class of subgroups H whose poset PH is a lower fiber of PG.
struct GroupFiber {
  SubgroupId representative = 0;
  std::uint32_t conjugacy_class = 0;
  std::string type;
  std::size_t order = 0;
  std::uint64_t class_size = 0;
  std::uint64_t multiplicity = 0;  // class size, times |G:H| for coset posets
  std::size_t poset_size = 0;
  int dimension = -1;
  HomologyProfile homology;
};

// Lookup/store hooks so expensive fiber homology can be cached on disk.
struct FiberCache {
  std::function<std::optional<HomologyProfile>(const std::string& key)> load;
  std::function<void(const std::string& key, const HomologyProfile&)> store;
};

struct GroupBoundsOptions {
  std::size_t max_poset = kDefaultMaxPoset;
  std::size_t jobs = 1;
  KnownFacts facts;
  const FiberCache* cache = nullptr;
  std::string cache_prefix;  // identifies the group in cache keys
};

struct GroupBoundsReport {
  LatticeKind kind = LatticeKind::Subgroups;
  std::size_t group_order = 0;
  std::size_t poset_size = 0;
  int dimension = -1;
  std::vector<GroupFiber> fibers;
  FiberStatistics statistics;
  BoundTable table;

  std::uint64_t upper(int m) const;
};

// Bounds for PG from the homology of PH over conjugacy-class
// representatives: L uses 1 < H < G, C uses 1 <= H < G, S uses 1 < H < G.
// Only fiber posets are built, never PG itself.
GroupBoundsReport group_betti_bounds(const SubgroupTable& t, LatticeKind kind,
                                     const GroupBoundsOptions& options = {});

// Fiber keys for a group poset, suitable for fiber_homologies().
std::vector<std::uint64_t> fiber_keys(const SubgroupTable& t, const GroupPoset& p);

// Homology of a group poset, computing each lower fiber once per
// conjugacy class.
struct GroupPosetHomology {
  GroupPoset poset;
  std::vector<HomologyProfile> fibers;
  HomologyProfile homology;
};
GroupPosetHomology group_poset_homology(const SubgroupTable& t, LatticeKind kind,
                                        std::size_t max_poset = kDefaultMaxPoset, std::size_t jobs = 1);

DecreasingVerdict group_is_decreasing(const GroupPosetHomology& h);

// Relations between LG, CG and SG coming from the pair (Delta CG, Delta SG),
// whose quotient is a wedge of |G| suspensions of Delta LG.
struct LcsRow {
  int m = 0;
  bool s_vanishes = false;      // H~_m(SG) = 0, so the two inequalities apply
  std::uint64_t c_rank = 0;     // rank H~_m(CG)
  std::uint64_t embed_bound = 0;  // |G| rank H~_{m-1}(LG)
  std::uint64_t c_next_rank = 0;  // rank H~_{m+1}(CG)
  std::uint64_t surject_bound = 0;  // |G| rank H~_m(LG)
  bool holds = true;
};

struct LcsReport {
  std::size_t group_order = 0;
  int l_dimension = -1;
  HomologyProfile l, c, s;
  HomologyProfile relative;           // H(Delta CG, Delta SG)
  HomologyProfile expected_relative;  // |G| copies of H~(suspension of Delta LG)
  bool relative_matches = false;
  std::vector<LcsRow> rows;
  // rank H~_{n+1}(CG) <= |G| rank H~_n(LG), n = dim LG (needs n >= 0).
  bool corollary_applies = false;
  std::uint64_t corollary_lhs = 0;
  std::uint64_t corollary_rhs = 0;
  bool all_hold = false;
};

LcsReport lcs_relation_check(const SubgroupTable& t, std::size_t max_poset = kDefaultMaxPoset,
                             std::size_t jobs = 1);

}  // namespace grouplat
