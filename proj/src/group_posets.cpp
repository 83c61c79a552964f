#include "grouplat/group_posets.hpp"

#include <unordered_map>

#include "grouplat/errors.hpp"

namespace grouplat {

LatticeKind parse_lattice_kind(const std::string& text) {
  if (text == "L") return LatticeKind::Subgroups;
  if (text == "C") return LatticeKind::Cosets;
  if (text == "S") return LatticeKind::PuncturedCosets;
  throw InputError("lattice selector must be L, C or S, not '" + text + "'");
}

std::string to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Subgroups: return "L";
    case LatticeKind::Cosets: return "C";
    case LatticeKind::PuncturedCosets: return "S";
  }
  return "?";
}

namespace {

std::string subgroup_label(const SubgroupTable& t, SubgroupId h) {
  return t.type_name(h) + "#" + std::to_string(h);
}

// Proper subgroups of `within`, optionally without the trivial one.
std::vector<SubgroupId> proper_subgroups(const SubgroupTable& t, SubgroupId within, bool with_trivial) {
  std::vector<SubgroupId> out;
  for (SubgroupId k : t.subgroups_of(within)) {
    if (k == within) continue;
    if (!with_trivial && t[k].order == 1) continue;
    out.push_back(k);
  }
  return out;
}

}  // namespace

GroupPoset subgroup_lattice_proper(const SubgroupTable& t, SubgroupId within) {
  const auto ids = proper_subgroups(t, within, false);
  std::unordered_map<SubgroupId, Element> index;
  std::vector<std::string> labels;
  GroupPoset out;
  for (SubgroupId k : ids) {
    index.emplace(k, static_cast<Element>(labels.size()));
    labels.push_back(subgroup_label(t, k));
    out.subgroup.push_back(k);
    out.representative.push_back(t.group().identity());
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (SubgroupId a : ids) {
    for (SubgroupId b : ids) {
      if (a != b && t.contains(b, a)) pairs.emplace_back(index[a], index[b]);
    }
  }
  out.poset = Poset::from_pairs(std::move(labels), pairs);
  out.poset.set_tags({out.subgroup.begin(), out.subgroup.end()});
  return out;
}

GroupPoset subgroup_lattice_proper(const SubgroupTable& t) { return subgroup_lattice_proper(t, t.whole()); }

std::size_t group_poset_size(const SubgroupTable& t, LatticeKind kind, SubgroupId within) {
  const bool cosets = kind != LatticeKind::Subgroups;
  std::size_t n = 0;
  for (SubgroupId k : proper_subgroups(t, within, kind == LatticeKind::Cosets)) {
    n += cosets ? t[within].order / t[k].order : 1;
  }
  return n;
}

GroupPoset coset_poset(const SubgroupTable& t, SubgroupId within, bool punctured, std::size_t max_elements) {
  const std::size_t total = group_poset_size(t, punctured ? LatticeKind::PuncturedCosets : LatticeKind::Cosets, within);
  if (total > max_elements) {
    throw OrderCapExceeded("coset poset would have " + std::to_string(total) + " elements, above the cap of " +
                           std::to_string(max_elements));
  }
  const PermGroup& g = t.group();
  const auto members = to_elements(t[within].elements);
  const auto ids = proper_subgroups(t, within, !punctured);

  GroupPoset out;
  std::vector<std::string> labels;
  labels.reserve(total);
  // coset_of[i][x]: element standing for the coset of ids[i] containing x.
  std::vector<std::vector<Element>> coset_of(ids.size(), std::vector<Element>(g.order(), 0));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto k_members = to_elements(t[ids[i]].elements);
    Bits assigned(g.order());
    for (GroupElement x : members) {
      if (assigned.test(x)) continue;
      const auto e = static_cast<Element>(labels.size());
      for (GroupElement k : k_members) {
        const GroupElement y = g.multiply(x, k);
        assigned.set(y);
        coset_of[i][y] = e;
      }
      labels.push_back("g" + std::to_string(x) + "*" + subgroup_label(t, ids[i]));
      out.subgroup.push_back(ids[i]);
      out.representative.push_back(x);
    }
  }

  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!t.contains(ids[j], ids[i])) continue;
      for (GroupElement x : members) {
        // Each coset of ids[i] is visited once, through its representative.
        const Element e = coset_of[i][x];
        if (out.representative[e] != x) continue;
        pairs.emplace_back(e, coset_of[j][x]);
      }
    }
  }
  out.poset = Poset::from_pairs(std::move(labels), pairs);
  out.poset.set_tags({out.subgroup.begin(), out.subgroup.end()});
  return out;
}

GroupPoset coset_poset(const SubgroupTable& t, bool punctured, std::size_t max_elements) {
  return coset_poset(t, t.whole(), punctured, max_elements);
}

GroupPoset group_poset(const SubgroupTable& t, LatticeKind kind, SubgroupId within, std::size_t max_elements) {
  switch (kind) {
    case LatticeKind::Subgroups: return subgroup_lattice_proper(t, within);
    case LatticeKind::Cosets: return coset_poset(t, within, false, max_elements);
    case LatticeKind::PuncturedCosets: return coset_poset(t, within, true, max_elements);
  }
  throw InputError("unknown lattice kind");
}

std::uint32_t fiber_isomorphism_key(const SubgroupTable& t, const GroupPoset& p, Element x) {
  p.poset.check_element(x);
  return t[p.subgroup[x]].conjugacy_class;
}

}  // namespace grouplat
