#include "grouplat/lattice.hpp"

#include <optional>
#include <string>

#include "grouplat/errors.hpp"

namespace grouplat {
namespace {

// Greatest element of `set` if it dominates the whole set.
std::optional<Element> greatest_of(const Poset& p, const Bits& set) {
  std::optional<Element> best;
  std::size_t best_count = 0;
  for (auto x = set.find_first(); x != Bits::npos; x = set.find_next(x)) {
    const std::size_t c = p.below(static_cast<Element>(x)).count();
    if (!best || c > best_count) {
      best = static_cast<Element>(x);
      best_count = c;
    }
  }
  if (!best) return std::nullopt;
  Bits down = p.below(*best);
  down.set(*best);
  if (!set.is_subset_of(down)) return std::nullopt;
  return best;
}

std::optional<Element> least_of(const Poset& p, const Bits& set) {
  std::optional<Element> best;
  std::size_t best_count = 0;
  for (auto x = set.find_first(); x != Bits::npos; x = set.find_next(x)) {
    const std::size_t c = p.above(static_cast<Element>(x)).count();
    if (!best || c > best_count) {
      best = static_cast<Element>(x);
      best_count = c;
    }
  }
  if (!best) return std::nullopt;
  Bits up = p.above(*best);
  up.set(*best);
  if (!set.is_subset_of(up)) return std::nullopt;
  return best;
}

}  // namespace

BoundedLattice as_bounded_lattice(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) throw NotALattice("empty poset has no bottom", 0, 0);

  BoundedLattice l;
  l.poset_ = p;
  l.meet_.resize(n * n);
  l.join_.resize(n * n);

  std::vector<Bits> down_closed(n), up_closed(n);
  for (std::size_t i = 0; i < n; ++i) {
    down_closed[i] = p.below(static_cast<Element>(i));
    down_closed[i].set(i);
    up_closed[i] = p.above(static_cast<Element>(i));
    up_closed[i].set(i);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto m = greatest_of(p, down_closed[a] & down_closed[b]);
      auto j = least_of(p, up_closed[a] & up_closed[b]);
      if (!m || !j) {
        throw NotALattice("elements '" + p.label(static_cast<Element>(a)) + "' and '" +
                              p.label(static_cast<Element>(b)) + "' lack a " +
                              (m ? "join" : "meet"),
                          a, b);
      }
      l.meet_[a * n + b] = l.meet_[b * n + a] = *m;
      l.join_[a * n + b] = l.join_[b * n + a] = *j;
    }
  }
  const auto mins = p.minimal_elements();
  const auto maxs = p.maximal_elements();
  // A lattice has a unique minimal and maximal element.
  l.bottom_ = mins.front();
  l.top_ = maxs.front();
  return l;
}

Poset BoundedLattice::proper_part() const {
  Bits keep = poset_.all();
  keep.reset(bottom_);
  keep.reset(top_);
  return poset_.induced(keep);
}

Poset with_bounds(const Poset& p, std::uint64_t bound_tag) {
  const std::size_t n = p.size();
  std::vector<std::string> labels;
  labels.reserve(n + 2);
  labels.emplace_back("0^");
  for (const auto& s : p.labels()) labels.push_back(s);
  labels.emplace_back("1^");

  std::vector<std::pair<Element, Element>> pairs;
  const auto top = static_cast<Element>(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = static_cast<Element>(i + 1);
    pairs.emplace_back(0, e);
    pairs.emplace_back(e, top);
  }
  for (auto [a, b] : p.covering_pairs()) pairs.emplace_back(a + 1, b + 1);
  if (n == 0) pairs.emplace_back(0, top);

  Poset q = Poset::from_pairs(std::move(labels), pairs);
  std::vector<std::uint64_t> tags;
  tags.reserve(n + 2);
  tags.push_back(bound_tag);
  for (auto t : p.tags()) tags.push_back(t);
  tags.push_back(bound_tag);
  q.set_tags(std::move(tags));
  return q;
}

std::vector<Element> complements(const BoundedLattice& l, Element z) {
  l.poset().check_element(z);
  if (z == l.bottom() || z == l.top()) {
    throw ImproperElement("complements are only defined for proper elements");
  }
  std::vector<Element> out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    const auto e = static_cast<Element>(x);
    if (l.meet(e, z) == l.bottom() && l.join(e, z) == l.top()) out.push_back(e);
  }
  return out;
}

}  // namespace grouplat
