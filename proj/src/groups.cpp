#include "grouplat/groups.hpp"

#include <algorithm>
#include <map>

#include "grouplat/errors.hpp"

namespace grouplat {

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Permutation> generators,
                                     std::size_t max_order) {
  for (const auto& s : generators) {
    if (s.degree() != degree) throw InputError("generator degree does not match group degree");
  }
  PermGroup g;
  g.degree_ = degree;
  g.generators_ = generators;

  std::map<Permutation, std::size_t> seen;
  std::vector<Permutation> found{Permutation::identity(degree)};
  seen.emplace(found.front(), 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& s : generators) {
      Permutation y = found[head] * s;
      if (seen.contains(y)) continue;
      if (found.size() >= max_order) {
        throw OrderCapExceeded("group order exceeds cap of " + std::to_string(max_order));
      }
      seen.emplace(y, found.size());
      found.push_back(std::move(y));
    }
  }
  std::sort(found.begin(), found.end());
  g.elements_ = std::move(found);

  const std::size_t n = g.elements_.size();
  g.table_.resize(n * n);
  g.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      g.table_[a * n + b] = *g.index_of(g.elements_[a] * g.elements_[b]);
    }
    g.inverse_[a] = *g.index_of(g.elements_[a].inverse());
  }
  for (const auto& s : generators) g.generator_indices_.push_back(*g.index_of(s));
  return g;
}

std::optional<GroupElement> PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<GroupElement>(it - elements_.begin());
}

namespace {

struct CatalogEntry {
  std::size_t degree;
  std::vector<std::string> generators;
  std::size_t expected_order;
};

std::string cycle_through(std::size_t n) {
  std::string s = "(";
  for (std::size_t i = 1; i <= n; ++i) {
    if (i > 1) s += ' ';
    s += std::to_string(i);
  }
  return s + ")";
}

std::optional<CatalogEntry> lookup(const std::string& name) {
  static const std::map<std::string, CatalogEntry> fixed = {
      {"S3", {3, {"(1 2)", "(1 2 3)"}, 6}},
      {"D8", {4, {"(1 2 3 4)", "(1 3)"}, 8}},
      // Left regular representation on 1,-1,i,-i,j,-j,k,-k.
      {"Q8", {8, {"(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"}, 8}},
      {"S4", {4, {"(1 2 3 4)", "(1 2)"}, 24}},
      {"A4", {4, {"(1 2 3)", "(1 2)(3 4)"}, 12}},
      {"A5", {5, {"(1 2 3 4 5)", "(1 2 3)"}, 60}},
      // Projective line over F7: points 0..6 are 1..7 and infinity is 8;
      // x -> x+1 and x -> -1/x.
      {"PSL27", {8, {"(1 2 3 4 5 6 7)", "(1 8)(2 7)(3 4)(5 6)"}, 168}},
      {"Z2^3", {6, {"(1 2)", "(3 4)", "(5 6)"}, 8}},
  };
  if (auto it = fixed.find(name); it != fixed.end()) return it->second;
  auto parse_n = [&](std::size_t skip) -> std::optional<std::size_t> {
    if (name.size() <= skip) return std::nullopt;
    std::size_t n = 0;
    for (std::size_t i = skip; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return std::nullopt;
      n = n * 10 + static_cast<std::size_t>(name[i] - '0');
      if (n > 100000) return std::nullopt;
    }
    return n;
  };
  if (name.rfind('Z', 0) == 0) {
    if (auto n = parse_n(1); n && *n >= 1) {
      if (*n == 1) return CatalogEntry{1, {}, 1};
      return CatalogEntry{*n, {cycle_through(*n)}, *n};
    }
  }
  if (name.rfind('D', 0) == 0) {
    if (auto n = parse_n(1); n && *n >= 6 && *n % 2 == 0) {
      const std::size_t k = *n / 2;
      std::string reflection;
      for (std::size_t i = 2, j = k; i < j; ++i, --j) {
        reflection += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
      }
      if (reflection.empty()) reflection = "()";
      return CatalogEntry{k, {cycle_through(k), reflection}, *n};
    }
  }
  return std::nullopt;
}

}  // namespace

PermGroup catalog_group(const std::string& name, std::size_t max_order) {
  std::string key = name;
  if (key == "PSL(2,7)" || key == "PSL2_7" || key == "GL32") key = "PSL27";
  if (key == "E8" || key == "Z2xZ2xZ2") key = "Z2^3";
  auto entry = lookup(key);
  if (!entry) throw InputError("unknown catalog group '" + name + "'");
  std::vector<Permutation> gens;
  for (const auto& text : entry->generators) gens.push_back(Permutation::parse_cycles(entry->degree, text));
  if (entry->expected_order > max_order) {
    throw OrderCapExceeded(name + " has order " + std::to_string(entry->expected_order) +
                           ", above the cap of " + std::to_string(max_order));
  }
  PermGroup g = PermGroup::from_generators(entry->degree, std::move(gens), max_order);
  if (g.order() != entry->expected_order) {
    throw Error("catalog group " + name + " generated order " + std::to_string(g.order()) +
                " instead of " + std::to_string(entry->expected_order));
  }
  return g;
}

std::vector<std::string> catalog_names() {
  return {"S3", "Z6", "Z12", "D8", "Q8", "S4", "A4", "A5", "PSL27", "Z2^3"};
}

Bits generate_subgroup(const PermGroup& g, const std::vector<GroupElement>& generators) {
  Bits set(g.order());
  std::vector<GroupElement> list{g.identity()};
  set.set(g.identity());
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (GroupElement s : generators) {
      const GroupElement y = g.multiply(list[head], s);
      if (!set.test(y)) {
        set.set(y);
        list.push_back(y);
      }
    }
  }
  return set;
}

namespace {

std::string classify(const PermGroup& g, const Bits& elements) {
  const auto members = to_elements(elements);
  const std::size_t n = members.size();
  std::map<std::size_t, std::size_t> orders;
  for (auto x : members) ++orders[g.element_order(x)];
  bool abelian = true;
  for (std::size_t i = 0; i < n && abelian; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.multiply(members[i], members[j]) != g.multiply(members[j], members[i])) {
        abelian = false;
        break;
      }
    }
  }
  const std::size_t exponent_max = orders.rbegin()->first;
  const std::size_t involutions = orders.contains(2) ? orders[2] : 0;
  const auto has = [&](std::size_t k) { return orders.contains(k); };
  const std::string ns = std::to_string(n);

  if (n == 1) return "1";
  if (exponent_max == n) return "Z" + ns;
  if (abelian) {
    if (n == 4) return "V4";
    if (exponent_max == 2) {
      std::size_t r = 0;
      for (std::size_t m = n; m > 1; m /= 2) ++r;
      return "Z2^" + std::to_string(r);
    }
    if (n == 8) return "Z2xZ4";
    if (n == 9) return "Z3^2";
    if (n == 12) return "Z2xZ6";
    return "Ab" + ns;
  }
  if (n == 6) return "S3";
  if (n == 8) return involutions == 1 ? "Q8" : "D8";
  if (n == 12 && involutions == 3 && !has(6)) return "A4";
  if (n == 21) return "F21";
  if (n == 24 && involutions == 9 && has(4) && !has(6) && !has(8)) return "S4";
  if (n == 60 && involutions == 15 && has(5) && !has(4) && !has(6)) return "A5";
  if (n == 168 && involutions == 21 && has(7) && !has(6)) return "PSL27";
  const std::size_t k = n / 2;
  if (n % 2 == 0 && has(k) && involutions == (k % 2 == 1 ? k : k + 1)) return "D" + ns;
  return "G" + ns;
}

}  // namespace

std::string SubgroupTable::key(const Bits& b) {
  std::vector<Bits::block_type> blocks;
  boost::to_block_range(b, std::back_inserter(blocks));
  return std::string(reinterpret_cast<const char*>(blocks.data()), blocks.size() * sizeof(Bits::block_type));
}

SubgroupTable SubgroupTable::enumerate(const PermGroup& g, std::size_t max_order) {
  if (g.order() > max_order) {
    throw OrderCapExceeded("subgroup enumeration capped at order " + std::to_string(max_order));
  }
  const std::size_t n = g.order();
  std::vector<Subgroup> found;
  std::unordered_map<std::string, SubgroupId> index;
  auto add = [&](Bits bits, std::vector<GroupElement> gens) -> std::optional<SubgroupId> {
    auto k = key(bits);
    if (index.contains(k)) return std::nullopt;
    const auto id = static_cast<SubgroupId>(found.size());
    index.emplace(std::move(k), id);
    Subgroup s;
    s.order = bits.count();
    s.elements = std::move(bits);
    s.generators = std::move(gens);
    found.push_back(std::move(s));
    return id;
  };

  std::vector<SubgroupId> cyclic;
  for (GroupElement x = 0; x < n; ++x) {
    std::vector<GroupElement> gens;
    if (x != g.identity()) gens.push_back(x);
    if (auto id = add(generate_subgroup(g, gens), gens)) cyclic.push_back(*id);
  }
  // Every subgroup is a join of cyclic subgroups, so closing under joins
  // with cyclic seeds reaches all of them.
  std::vector<SubgroupId> work = cyclic;
  while (!work.empty()) {
    const SubgroupId s = work.back();
    work.pop_back();
    for (SubgroupId c : cyclic) {
      if (found[c].elements.is_subset_of(found[s].elements)) continue;
      std::vector<GroupElement> gens = found[s].generators;
      gens.insert(gens.end(), found[c].generators.begin(), found[c].generators.end());
      Bits bits = generate_subgroup(g, gens);
      if (auto id = add(std::move(bits), gens)) work.push_back(*id);
    }
  }

  std::vector<std::vector<GroupElement>> members(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) members[i] = to_elements(found[i].elements);
  std::vector<SubgroupId> perm(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<SubgroupId>(i);
  std::sort(perm.begin(), perm.end(), [&](SubgroupId a, SubgroupId b) {
    if (found[a].order != found[b].order) return found[a].order < found[b].order;
    return members[a] < members[b];
  });

  SubgroupTable t;
  t.group_ = g;
  t.group_order_ = n;
  for (SubgroupId old : perm) t.subgroups_.push_back(std::move(found[old]));
  for (std::size_t i = 0; i < t.subgroups_.size(); ++i) {
    t.index_.emplace(key(t.subgroups_[i].elements), static_cast<SubgroupId>(i));
  }
  const std::size_t m = t.subgroups_.size();
  t.contains_.assign(m, Bits(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (t.subgroups_[b].order <= t.subgroups_[a].order &&
          t.subgroups_[a].order % t.subgroups_[b].order == 0 &&
          t.subgroups_[b].elements.is_subset_of(t.subgroups_[a].elements)) {
        t.contains_[a].set(b);
      }
    }
  }

  // Conjugacy classes: orbits under conjugation by the generators of G.
  std::vector<std::vector<GroupElement>> conj;
  for (GroupElement s : g.generator_indices()) {
    std::vector<GroupElement> map(n);
    for (GroupElement x = 0; x < n; ++x) map[x] = g.multiply(g.multiply(g.inverse(s), x), s);
    conj.push_back(std::move(map));
  }
  std::vector<std::int64_t> cls(m, -1);
  for (std::size_t start = 0; start < m; ++start) {
    if (cls[start] >= 0) continue;
    const auto id = static_cast<std::uint32_t>(t.classes_.size());
    std::vector<SubgroupId> orbit{static_cast<SubgroupId>(start)};
    cls[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Bits& src = t.subgroups_[orbit[head]].elements;
      for (const auto& map : conj) {
        Bits image(n);
        for (auto x = src.find_first(); x != Bits::npos; x = src.find_next(x)) image.set(map[x]);
        const SubgroupId j = *t.find(image);
        if (cls[j] < 0) {
          cls[j] = id;
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    t.classes_.push_back(std::move(orbit));
  }
  for (std::size_t i = 0; i < m; ++i) t.subgroups_[i].conjugacy_class = static_cast<std::uint32_t>(cls[i]);

  for (const auto& s : t.subgroups_) t.type_names_.push_back(classify(g, s.elements));
  return t;
}

std::optional<SubgroupId> SubgroupTable::find(const Bits& elements) const {
  auto it = index_.find(key(elements));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SubgroupTable::contains(SubgroupId big, SubgroupId small) const { return contains_[big].test(small); }

SubgroupId SubgroupTable::intersection(SubgroupId a, SubgroupId b) const {
  auto id = find(subgroups_[a].elements & subgroups_[b].elements);
  if (!id) throw Error("subgroup table is not closed under intersection");
  return *id;
}

SubgroupId SubgroupTable::join(SubgroupId a, SubgroupId b) const {
  std::vector<GroupElement> gens = subgroups_[a].generators;
  gens.insert(gens.end(), subgroups_[b].generators.begin(), subgroups_[b].generators.end());
  auto id = find(generate_subgroup(group_, gens));
  if (!id) throw Error("subgroup table is missing a join");
  return *id;
}

std::vector<SubgroupId> SubgroupTable::subgroups_of(SubgroupId h) const {
  std::vector<SubgroupId> out;
  for (auto b = contains_[h].find_first(); b != Bits::npos; b = contains_[h].find_next(b)) {
    out.push_back(static_cast<SubgroupId>(b));
  }
  return out;
}

bool SubgroupTable::intersection_closed() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (!find(subgroups_[a].elements & subgroups_[b].elements)) return false;
    }
  }
  return true;
}

}  // namespace grouplat
