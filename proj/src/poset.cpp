#include "grouplat/poset.hpp"

#include <algorithm>
#include <unordered_map>

#include "grouplat/errors.hpp"

namespace grouplat {

std::vector<Element> to_elements(const Bits& bits) {
  std::vector<Element> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

Bits to_bits(std::size_t n, std::span<const Element> elements) {
  Bits bits(n);
  for (Element e : elements) {
    if (e >= n) throw UnknownElement("element index " + std::to_string(e) + " out of range");
    bits.set(e);
  }
  return bits;
}

Poset Poset::from_pairs(std::vector<std::string> labels,
                        std::span<const std::pair<Element, Element>> pairs) {
  const std::size_t n = labels.size();
  {
    std::unordered_map<std::string_view, Element> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (!seen.emplace(labels[i], static_cast<Element>(i)).second) {
        throw DuplicateLabel("duplicate label '" + labels[i] + "'");
      }
    }
  }

  std::vector<std::vector<Element>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw UnknownElement("relation refers to unknown element");
    if (a == b) throw CycleError("relation contains " + labels[a] + " < " + labels[a]);
    succ[a].push_back(b);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Element b : s) ++indeg[b];
  }

  // Kahn's algorithm; leftover vertices lie on a cycle.
  std::vector<Element> topo;
  topo.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (indeg[i] == 0) topo.push_back(static_cast<Element>(i));
  }
  for (std::size_t head = 0; head < topo.size(); ++head) {
    for (Element b : succ[topo[head]]) {
      if (--indeg[b] == 0) topo.push_back(b);
    }
  }
  if (topo.size() != n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (indeg[i] != 0) {
        throw CycleError("order relation has a cycle through '" + labels[i] + "'");
      }
    }
  }

  Poset p;
  p.above_.assign(n, Bits(n));
  p.below_.assign(n, Bits(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Bits& up = p.above_[*it];
    for (Element b : succ[*it]) {
      up.set(b);
      up |= p.above_[b];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Bits& up = p.above_[a];
    for (auto b = up.find_first(); b != Bits::npos; b = up.find_next(b)) {
      p.below_[b].set(a);
    }
  }
  p.labels_ = std::move(labels);
  p.tags_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.tags_[i] = i;
  return p;
}

Poset Poset::from_label_pairs(std::vector<std::string> labels,
                              std::span<const std::pair<std::string, std::string>> pairs) {
  std::unordered_map<std::string, Element> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<Element>(i));
  std::vector<std::pair<Element, Element>> raw;
  raw.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw UnknownElement("unknown element '" + a + "'");
    if (ib == index.end()) throw UnknownElement("unknown element '" + b + "'");
    raw.emplace_back(ia->second, ib->second);
  }
  return from_pairs(std::move(labels), raw);
}

void Poset::set_tags(std::vector<std::uint64_t> tags) {
  if (tags.size() != size()) throw InputError("tag vector has wrong length");
  tags_ = std::move(tags);
}

std::optional<Element> Poset::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Element>(i);
  }
  return std::nullopt;
}

std::optional<Element> Poset::find_tag(std::uint64_t tag) const {
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    if (tags_[i] == tag) return static_cast<Element>(i);
  }
  return std::nullopt;
}

void Poset::check_element(Element e) const {
  if (e >= size()) throw UnknownElement("element index " + std::to_string(e) + " not in poset");
}

Poset Poset::induced(const Bits& keep) const {
  if (keep.size() != size()) throw UnknownElement("subset mask has wrong size");
  const auto kept = to_elements(keep);
  const std::size_t m = kept.size();
  std::vector<Element> new_index(size(), 0);
  for (std::size_t i = 0; i < m; ++i) new_index[kept[i]] = static_cast<Element>(i);

  Poset q;
  q.labels_.reserve(m);
  q.tags_.reserve(m);
  q.above_.assign(m, Bits(m));
  q.below_.assign(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i) {
    const Element old = kept[i];
    q.labels_.push_back(labels_[old]);
    q.tags_.push_back(tags_[old]);
    const Bits up = above_[old] & keep;
    for (auto b = up.find_first(); b != Bits::npos; b = up.find_next(b)) {
      q.above_[i].set(new_index[b]);
      q.below_[new_index[b]].set(i);
    }
  }
  return q;
}

Poset Poset::strictly_below(Element h) const {
  check_element(h);
  return induced(below_[h]);
}

Poset Poset::strictly_above(Element h) const {
  check_element(h);
  return induced(above_[h]);
}

Poset Poset::remove(std::span<const Element> m) const {
  Bits keep = all();
  for (Element e : m) {
    check_element(e);
    keep.reset(e);
  }
  return induced(keep);
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (above_[i].none()) out.push_back(static_cast<Element>(i));
  }
  return out;
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (below_[i].none()) out.push_back(static_cast<Element>(i));
  }
  return out;
}

bool Poset::is_antichain(std::span<const Element> m) const {
  for (Element e : m) check_element(e);
  const Bits set = to_bits(size(), m);
  for (Element e : m) {
    if (above_[e].intersects(set)) return false;
  }
  return true;
}

std::vector<std::pair<Element, Element>> Poset::covering_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    const Bits& up = above_[a];
    for (auto b = up.find_first(); b != Bits::npos; b = up.find_next(b)) {
      // a < b is a cover iff nothing lies strictly between them.
      if (!up.intersects(below_[b])) out.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
    }
  }
  return out;
}

std::vector<Element> Poset::linear_extension() const {
  // a < b forces below(a) to be a proper subset of below(b).
  std::vector<Element> order(size());
  std::vector<std::size_t> count(size());
  for (std::size_t i = 0; i < size(); ++i) {
    order[i] = static_cast<Element>(i);
    count[i] = below_[i].count();
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return count[a] < count[b]; });
  return order;
}

Bits Poset::all() const {
  Bits b(size());
  b.set();
  return b;
}

Bits LevelDecomposition::up_to(std::size_t n, int k) const {
  Bits b(n);
  for (int level = 0; level <= k && level < static_cast<int>(levels.size()); ++level) {
    for (Element e : levels[static_cast<std::size_t>(level)]) b.set(e);
  }
  return b;
}

LevelDecomposition level_decomposition(const Poset& p) {
  LevelDecomposition d;
  d.height.assign(p.size(), 0);
  int top = -1;
  for (Element h : p.linear_extension()) {
    int height = 0;
    const Bits& down = p.below(h);
    for (auto x = down.find_first(); x != Bits::npos; x = down.find_next(x)) {
      height = std::max(height, d.height[x] + 1);
    }
    d.height[h] = height;
    top = std::max(top, height);
  }
  d.levels.resize(static_cast<std::size_t>(top + 1));
  for (std::size_t i = 0; i < p.size(); ++i) {
    d.levels[static_cast<std::size_t>(d.height[i])].push_back(static_cast<Element>(i));
  }
  return d;
}

}  // namespace grouplat
