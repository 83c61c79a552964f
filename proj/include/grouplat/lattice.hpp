#pragma once

#include <vector>

#include "grouplat/poset.hpp"

namespace grouplat {

// A finite poset with a least element, a greatest element, and total
// meet/join operations, tabulated.
class BoundedLattice {
public:
  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }

  // The proper part: everything except bottom and top.
  Poset proper_part() const;

private:
  friend BoundedLattice as_bounded_lattice(const Poset& p);
  Poset poset_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<Element> meet_;
  std::vector<Element> join_;
};

// Throws NotALattice naming a pair without a meet or join.
BoundedLattice as_bounded_lattice(const Poset& p);

// Adjoins a new bottom "0^" and top "1^" around `p`. Tags of the new
// elements are set to `bound_tag`.
Poset with_bounds(const Poset& p, std::uint64_t bound_tag = ~std::uint64_t{0});

// z^perp = { x : meet(x,z) = bottom and join(x,z) = top }, sorted by index.
std::vector<Element> complements(const BoundedLattice& l, Element z);

}  // namespace grouplat
