#include "grouplat/group_bounds.hpp"

#include <algorithm>

#include "grouplat/parallel.hpp"

namespace grouplat {

std::uint64_t GroupBoundsReport::upper(int m) const {
  for (const auto& row : table.rows) {
    if (row.m == m) return row.upper;
  }
  return 0;
}

std::vector<std::uint64_t> fiber_keys(const SubgroupTable& t, const GroupPoset& p) {
  std::vector<std::uint64_t> keys(p.poset.size());
  for (Element e = 0; e < p.poset.size(); ++e) keys[e] = fiber_isomorphism_key(t, p, e);
  return keys;
}

GroupBoundsReport group_betti_bounds(const SubgroupTable& t, LatticeKind kind, const GroupBoundsOptions& options) {
  GroupBoundsReport r;
  r.kind = kind;
  r.group_order = t.group_order();
  r.poset_size = group_poset_size(t, kind, t.whole());

  const bool cosets = kind != LatticeKind::Subgroups;
  for (const auto& cls : t.classes()) {
    const SubgroupId h = cls.front();
    if (h == t.whole()) continue;
    if (t[h].order == 1 && kind != LatticeKind::Cosets) continue;
    GroupFiber f;
    f.representative = h;
    f.conjugacy_class = t[h].conjugacy_class;
    f.type = t.type_name(h);
    f.order = t[h].order;
    f.class_size = cls.size();
    f.multiplicity = f.class_size * (cosets ? t.group_order() / t[h].order : 1);
    r.fibers.push_back(std::move(f));
  }

  parallel_for(r.fibers.size(), options.jobs, [&](std::size_t i) {
    GroupFiber& f = r.fibers[i];
    const std::string key = options.cache_prefix + "/" + to_string(kind) + "/fiber-" + std::to_string(f.representative);
    const auto fiber = group_poset(t, kind, f.representative, options.max_poset);
    f.poset_size = fiber.poset.size();
    f.dimension = level_decomposition(fiber.poset).top();
    if (options.cache && options.cache->load) {
      if (auto hit = options.cache->load(key)) {
        f.homology = *hit;
        return;
      }
    }
    f.homology = reduced_homology(fiber.poset);
    if (options.cache && options.cache->store) options.cache->store(key, f.homology);
  });

  std::vector<std::pair<HomologyProfile, std::uint64_t>> weighted;
  for (const auto& f : r.fibers) {
    weighted.emplace_back(f.homology, f.multiplicity);
    r.dimension = std::max(r.dimension, f.dimension + 1);
  }
  r.statistics = FiberStatistics(std::move(weighted));
  const std::int64_t chi = r.statistics.poset_reduced_euler();
  r.table = bound_table(r.statistics, r.dimension + 1, r.poset_size > 0, options.facts, chi);
  return r;
}

GroupPosetHomology group_poset_homology(const SubgroupTable& t, LatticeKind kind, std::size_t max_poset,
                                        std::size_t jobs) {
  GroupPosetHomology h{group_poset(t, kind, t.whole(), max_poset), {}, {}};
  const auto keys = fiber_keys(t, h.poset);
  h.fibers = fiber_homologies(h.poset.poset, &keys, jobs);
  h.homology = reduced_homology(h.poset.poset);
  return h;
}

DecreasingVerdict group_is_decreasing(const GroupPosetHomology& h) {
  DecreasingClassifier c(h.poset.poset, h.fibers);
  return c.verdict(h.homology);
}

LcsReport lcs_relation_check(const SubgroupTable& t, std::size_t max_poset, std::size_t jobs) {
  LcsReport r;
  const std::uint64_t order = t.group_order();
  r.group_order = order;
  const auto l = subgroup_lattice_proper(t);
  const auto c = coset_poset(t, false, max_poset);
  r.l_dimension = level_decomposition(l.poset).top();

  Bits punctured(c.poset.size());
  for (Element e = 0; e < c.poset.size(); ++e) {
    if (t[c.subgroup[e]].order > 1) punctured.set(e);
  }
  const auto whole = order_complex(c.poset);
  const auto sub = order_complex(c.poset, punctured);

  std::vector<HomologyProfile> results(4);
  parallel_for(4, jobs, [&](std::size_t i) {
    switch (i) {
      case 0: results[0] = reduced_homology(l.poset); break;
      case 1: results[1] = homology(chain_complex(whole), true); break;
      case 2: results[2] = homology(chain_complex(sub), true); break;
      default: results[3] = relative_homology(relative_chain_complex(whole, sub)); break;
    }
  });
  r.l = results[0];
  r.c = results[1];
  r.s = results[2];
  r.relative = results[3];

  r.expected_relative = HomologyProfile(false);
  for (const auto& [m, g] : r.l.groups()) {
    if (!g.is_zero()) r.expected_relative.set(m + 1, g.repeated(order));
  }
  r.relative_matches = r.relative.same_groups(r.expected_relative);

  r.all_hold = r.relative_matches;
  const int top = level_decomposition(c.poset).top() + 1;
  for (int m = 0; m <= top; ++m) {
    LcsRow row;
    row.m = m;
    row.s_vanishes = r.s.at(m).is_zero();
    row.c_rank = r.c.rank(m);
    row.embed_bound = order * r.l.rank(m - 1);
    row.c_next_rank = r.c.rank(m + 1);
    row.surject_bound = order * r.l.rank(m);
    if (row.s_vanishes) row.holds = row.c_rank <= row.embed_bound && row.c_next_rank >= row.surject_bound;
    r.all_hold = r.all_hold && row.holds;
    r.rows.push_back(row);
  }
  if (r.l_dimension >= 0) {
    r.corollary_applies = true;
    r.corollary_lhs = r.c.rank(r.l_dimension + 1);
    r.corollary_rhs = order * r.l.rank(r.l_dimension);
    r.all_hold = r.all_hold && r.corollary_lhs <= r.corollary_rhs;
  }
  return r;
}

}  // namespace grouplat
