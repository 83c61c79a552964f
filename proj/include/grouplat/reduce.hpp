#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grouplat/groups.hpp"
#include "grouplat/homology.hpp"
#include "grouplat/poset.hpp"
#include "grouplat/simplicial.hpp"

namespace grouplat {

// Meet in the ambient lattice, addressed by poset tags. nullopt stands for
// the bottom element.
using MeetOracle = std::function<std::optional<std::uint64_t>(std::uint64_t, std::uint64_t)>;

// Tags are subgroup ids; the meet is the literal intersection, the trivial
// subgroup being the bottom.
MeetOracle subgroup_meet_oracle(const SubgroupTable& t);

// The subposet of all meets of nonempty sets of maximal elements, bottom
// excluded. Throws MeetUnavailable if a meet is not an element of p.
Poset coatom_meet_reduction(const Poset& p, const MeetOracle& meet);
// Meets taken in p with a bottom and top adjoined; throws MeetUnavailable
// when that is not a lattice.
Poset coatom_meet_reduction(const Poset& p);

struct WedgeSummand {
  Element m = 0;  // index in the original poset
  std::string label;
  SimplicialComplex lower;  // Delta P_{<m}
  SimplicialComplex upper;  // Delta P_{>m}
};

struct WedgeDecomposition {
  Poset remainder;  // P with M removed
  std::vector<WedgeSummand> summands;
};

// Throws NotAnAntichain.
WedgeDecomposition remove_antichain(const Poset& p, std::span<const Element> m);

struct WedgeCheck {
  HomologyProfile whole;      // H~(P)
  HomologyProfile remainder;  // H~(P without M)
  HomologyProfile isolated;   // sum of H~(suspension(lower * upper))
  bool equal = false;         // whole == remainder + isolated
};

// Homology-level check of the wedge formula. A mismatch means the homotopy
// hypothesis of the decomposition failed for this M.
WedgeCheck verify_wedge_homology(const Poset& p, const WedgeDecomposition& d);

struct PipelineStep {
  std::string name;
  std::size_t size_before = 0;
  std::size_t size_after = 0;
  HomologyProfile before;
  HomologyProfile after;
  HomologyProfile isolated;
  bool verified = false;
  std::vector<std::string> details;
};

struct PipelineOptions {
  // Index into the S4 classes (ordered by smallest subgroup id) whose six
  // members get removed. Unset: try each until one verifies.
  std::optional<std::size_t> thin_class;
  // Negative control: take S from an S4 class other than the thinned one.
  bool mismatched_complement = false;
  bool skip_reduction = false;
  std::size_t jobs = 1;
};

struct PipelineReport {
  HomologyProfile direct;  // H~ of the full subgroup lattice
  std::vector<PipelineStep> steps;
  std::vector<std::string> dropped_types;
  std::int64_t euler_after_first_removal = 0;
  std::optional<std::size_t> thinned_class;
  std::string kept_subgroup;
  bool complement_empty = false;
  bool final_trivial = false;
  bool success = false;
  std::vector<std::string> attempts;
};

// The reduction sequence for the subgroup lattice of PSL(2,7): coatom
// reduction, removal of the F21 subgroups, removal of six subgroups of one
// S4 class, coatom reduction again, and the complement check S^perp = {}.
PipelineReport psl27_pipeline(const SubgroupTable& t, const PipelineOptions& options = {});
PipelineReport psl27_pipeline(const PipelineOptions& options = {});

}  // namespace grouplat
