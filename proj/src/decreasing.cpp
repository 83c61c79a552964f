#include "grouplat/decreasing.hpp"

#include "grouplat/spectral.hpp"

namespace grouplat {

DecreasingClassifier::DecreasingClassifier(const Poset& p, std::vector<HomologyProfile> fibers)
    : p_(&p), levels_(level_decomposition(p)), fibers_(std::move(fibers)) {
  const std::size_t n = p.size();
  nondecreasing_at_.assign(levels_.levels.size(), Bits(n));
  fiber_decreasing_.assign(n, false);
  fiber_s_.assign(n, 0);
  for (std::size_t k = 0; k < levels_.levels.size(); ++k) {
    for (Element h : levels_.levels[k]) {
      const int height = static_cast<int>(k);
      const int s = decreasing_levels_below(p.below(h), height - 1);
      fiber_s_[h] = s;
      // dim P_{<h} = height - 1; the empty fiber is never decreasing.
      fiber_decreasing_[h] = height >= 1 && hdim(fibers_[h]) <= (height - 1) - s - 1;
      if (!fiber_decreasing_[h]) nondecreasing_at_[k].set(h);
    }
  }
}

int DecreasingClassifier::decreasing_levels_below(const Bits& region, int top) const {
  int s = 0;
  for (int k = 0; k <= top; ++k) {
    if (!region.intersects(nondecreasing_at_[static_cast<std::size_t>(k)])) ++s;
  }
  return s;
}

DecreasingVerdict DecreasingClassifier::verdict(const HomologyProfile& whole) const {
  DecreasingVerdict v;
  v.dim = levels_.top();
  v.hdim = hdim(whole);
  for (std::size_t k = 0; k < levels_.levels.size(); ++k) {
    const bool dec = nondecreasing_at_[k].none();
    v.level_decreasing.push_back(dec);
    if (dec) ++v.s;
  }
  v.decreasing = !p_->empty() && v.hdim <= v.dim - v.s - 1;
  if (!p_->empty()) {
    v.level_bounds_hold = v.hdim <= v.dim - v.s && (v.s == 0 || v.hdim <= v.dim - 1);
  }
  return v;
}

SufficiencyReport DecreasingClassifier::sufficiency(int k) const {
  SufficiencyReport r;
  r.k = k;
  if (k < 0 || k > levels_.top()) {
    r.note = "no such level";
    return r;
  }
  r.level_exists = true;
  const auto ku = static_cast<std::size_t>(k);
  r.level_decreasing = nondecreasing_at_[ku].none();
  r.s_below = decreasing_levels_below(p_->all(), k - 1);
  if (r.level_decreasing) {
    r.note = "level is decreasing, the criterion needs a non-decreasing level";
    return r;
  }
  r.certified = true;
  for (Element h : levels_.levels[ku]) {
    SufficiencyRow row;
    row.h = h;
    row.fiber_decreasing = fiber_decreasing_[h];
    row.fiber_s = fiber_s_[h];
    row.fiber_hdim = hdim(fibers_[h]);
    row.satisfied = row.fiber_decreasing || row.fiber_s >= r.s_below + 1;
    r.certified = r.certified && row.satisfied;
    if (row.fiber_hdim > k - r.s_below - 2) r.fiber_bound_holds = false;
    r.rows.push_back(row);
  }
  if (!r.certified) r.fiber_bound_holds = true;
  r.note = r.certified ? "every element of the level passes" : "some element fails both alternatives";
  return r;
}

DecreasingVerdict is_decreasing(const Poset& p, std::size_t jobs) {
  DecreasingClassifier c(p, fiber_homologies(p, nullptr, jobs));
  return c.verdict(reduced_homology(p));
}

}  // namespace grouplat
