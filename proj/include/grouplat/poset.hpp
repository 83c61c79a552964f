#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace grouplat {

using Element = std::uint32_t;
using Bits = boost::dynamic_bitset<std::uint64_t>;

std::vector<Element> to_elements(const Bits& bits);
Bits to_bits(std::size_t n, std::span<const Element> elements);

// Finite poset with the strict order stored as transitive-closure bitsets.
//
// Every element carries a display label and an integer tag. Both survive
// induced-subposet operations, so callers can map elements of a reduced
// poset back to whatever they originally stood for (subgroups, cosets...).
class Poset {
public:
  Poset() = default;

  // Transitive closure of `pairs` (a,b meaning a<b). Throws CycleError if
  // the closure is not antisymmetric, DuplicateLabel on repeated labels.
  static Poset from_pairs(std::vector<std::string> labels,
                          std::span<const std::pair<Element, Element>> pairs);
  static Poset from_label_pairs(
      std::vector<std::string> labels,
      std::span<const std::pair<std::string, std::string>> pairs);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  bool less(Element a, Element b) const { return above_[a].test(b); }
  bool leq(Element a, Element b) const { return a == b || less(a, b); }
  bool comparable(Element a, Element b) const {
    return a == b || less(a, b) || less(b, a);
  }

  const Bits& below(Element h) const { return below_[h]; }
  const Bits& above(Element h) const { return above_[h]; }

  const std::string& label(Element e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::uint64_t tag(Element e) const { return tags_[e]; }
  const std::vector<std::uint64_t>& tags() const { return tags_; }
  void set_tags(std::vector<std::uint64_t> tags);

  std::optional<Element> find(std::string_view label) const;
  std::optional<Element> find_tag(std::uint64_t tag) const;

  // Induced subposet on the set bits of `keep`, in increasing index order.
  Poset induced(const Bits& keep) const;

  Poset strictly_below(Element h) const;
  Poset strictly_above(Element h) const;
  Poset remove(std::span<const Element> m) const;

  std::vector<Element> maximal_elements() const;
  std::vector<Element> minimal_elements() const;
  bool is_antichain(std::span<const Element> m) const;

  std::vector<std::pair<Element, Element>> covering_pairs() const;

  // Elements sorted so that a < b implies a precedes b.
  std::vector<Element> linear_extension() const;

  Bits all() const;

  void check_element(Element e) const;

private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> tags_;
  std::vector<Bits> above_;
  std::vector<Bits> below_;
};

// Levels P^0..P^n: height(h) is the number of elements in a longest chain
// strictly below h.
struct LevelDecomposition {
  std::vector<std::vector<Element>> levels;
  std::vector<int> height;

  // Largest level index; -1 for the empty poset. Equals dim of the order complex.
  int top() const { return static_cast<int>(levels.size()) - 1; }
  Bits up_to(std::size_t n, int k) const;
};

LevelDecomposition level_decomposition(const Poset& p);

}  // namespace grouplat
