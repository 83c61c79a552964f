#pragma once

#include <string>
#include <vector>

#include "grouplat/homology.hpp"
#include "grouplat/poset.hpp"

namespace grouplat {

struct DecreasingVerdict {
  bool decreasing = false;
  int s = 0;      // number of decreasing levels
  int hdim = -1;
  int dim = -1;
  std::vector<bool> level_decreasing;
  // Hdim <= dim - s, and Hdim <= dim - 1 whenever some level is decreasing.
  bool level_bounds_hold = true;
};

struct SufficiencyRow {
  Element h = 0;
  bool fiber_decreasing = false;
  int fiber_s = 0;
  int fiber_hdim = -1;
  bool satisfied = false;
};

struct SufficiencyReport {
  int k = 0;
  bool level_exists = false;
  bool level_decreasing = false;  // the theorem needs a non-decreasing level
  int s_below = 0;                // decreasing levels strictly below k
  std::vector<SufficiencyRow> rows;
  // The hypotheses of the criterion hold at level k. This does not imply
  // that P is decreasing; compare with the verdict.
  bool certified = false;
  // Every fiber at level k has Hdim <= k - s_below - 2 (checked whenever
  // certified).
  bool fiber_bound_holds = true;
  std::string note;
};

// Decides "decreasing" for P and, on the way, for every lower fiber P_{<h}.
// The levels of P_{<h} are the levels of P cut down to P_{<h}, so a single
// pass upward through the levels settles every fiber.
class DecreasingClassifier {
public:
  // fibers[h] is the reduced homology of P_{<h}.
  DecreasingClassifier(const Poset& p, std::vector<HomologyProfile> fibers);

  bool fiber_decreasing(Element h) const { return fiber_decreasing_[h]; }
  int fiber_s(Element h) const { return fiber_s_[h]; }

  // `whole` is the reduced homology of P itself.
  DecreasingVerdict verdict(const HomologyProfile& whole) const;

  SufficiencyReport sufficiency(int k) const;

private:
  int decreasing_levels_below(const Bits& region, int top) const;

  const Poset* p_;
  LevelDecomposition levels_;
  std::vector<HomologyProfile> fibers_;
  std::vector<Bits> nondecreasing_at_;  // per level
  std::vector<bool> fiber_decreasing_;
  std::vector<int> fiber_s_;
};

DecreasingVerdict is_decreasing(const Poset& p, std::size_t jobs = 1);

}  // namespace grouplat
