#include "grouplat/reduce.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "grouplat/errors.hpp"
#include "grouplat/group_posets.hpp"
#include "grouplat/lattice.hpp"
#include "grouplat/parallel.hpp"

namespace grouplat {

MeetOracle subgroup_meet_oracle(const SubgroupTable& t) {
  return [&t](std::uint64_t a, std::uint64_t b) -> std::optional<std::uint64_t> {
    if (a >= t.size() || b >= t.size()) throw MeetUnavailable("tag is not a subgroup id");
    const SubgroupId m = t.intersection(static_cast<SubgroupId>(a), static_cast<SubgroupId>(b));
    if (m == t.trivial()) return std::nullopt;
    return m;
  };
}

Poset coatom_meet_reduction(const Poset& p, const MeetOracle& meet) {
  std::unordered_map<std::uint64_t, Element> by_tag;
  for (Element e = 0; e < p.size(); ++e) {
    if (!by_tag.emplace(p.tag(e), e).second) throw MeetUnavailable("poset tags are not distinct");
  }
  const auto maximal = p.maximal_elements();
  Bits keep(p.size());
  std::vector<Element> queue;
  for (Element c : maximal) {
    keep.set(c);
    queue.push_back(c);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (Element c : maximal) {
      const auto m = meet(p.tag(x), p.tag(c));
      if (!m) continue;
      auto it = by_tag.find(*m);
      if (it == by_tag.end()) {
        throw MeetUnavailable("meet of '" + p.label(x) + "' and '" + p.label(c) + "' is not in the poset");
      }
      if (!keep.test(it->second)) {
        keep.set(it->second);
        queue.push_back(it->second);
      }
    }
  }
  return p.induced(keep);
}

Poset coatom_meet_reduction(const Poset& p) {
  Poset bounded = with_bounds(p);
  std::vector<std::uint64_t> tags(bounded.size());
  for (std::size_t i = 0; i < tags.size(); ++i) tags[i] = i;
  bounded.set_tags(tags);
  BoundedLattice l;
  try {
    l = as_bounded_lattice(bounded);
  } catch (const NotALattice& e) {
    throw MeetUnavailable(std::string("no lattice meets: ") + e.what());
  }
  // Work on a copy of p tagged by position so the oracle can index the table.
  Poset q = p;
  std::vector<std::uint64_t> pos(p.size());
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
  q.set_tags(pos);
  const MeetOracle meet = [&l](std::uint64_t a, std::uint64_t b) -> std::optional<std::uint64_t> {
    const Element m = l.meet(static_cast<Element>(a + 1), static_cast<Element>(b + 1));
    if (m == l.bottom()) return std::nullopt;
    return m - 1;
  };
  const Poset reduced_positions = coatom_meet_reduction(q, meet);
  Bits keep(p.size());
  for (auto t : reduced_positions.tags()) keep.set(t);
  return p.induced(keep);
}

WedgeDecomposition remove_antichain(const Poset& p, std::span<const Element> m) {
  for (Element e : m) p.check_element(e);
  if (!p.is_antichain(m)) throw NotAnAntichain("removed set is not an antichain");
  WedgeDecomposition d;
  d.remainder = p.remove(m);
  for (Element e : m) {
    WedgeSummand s;
    s.m = e;
    s.label = p.label(e);
    s.lower = order_complex(p.strictly_below(e));
    s.upper = order_complex(p.strictly_above(e));
    d.summands.push_back(std::move(s));
  }
  return d;
}

WedgeCheck verify_wedge_homology(const Poset& p, const WedgeDecomposition& d) {
  WedgeCheck c;
  c.whole = reduced_homology(p);
  c.remainder = reduced_homology(d.remainder);
  c.isolated = HomologyProfile(true);
  for (const auto& s : d.summands) c.isolated += reduced_homology(suspension(join(s.lower, s.upper)));
  HomologyProfile combined = c.remainder;
  combined += c.isolated;
  c.equal = c.whole.same_groups(combined);
  return c;
}

namespace {

std::vector<Element> elements_of_type(const SubgroupTable& t, const Poset& p, const std::string& type) {
  std::vector<Element> out;
  for (Element e = 0; e < p.size(); ++e) {
    if (t.type_name(static_cast<SubgroupId>(p.tag(e))) == type) out.push_back(e);
  }
  return out;
}

std::string describe(const HomologyProfile& h) {
  std::string s;
  for (int m : h.support()) {
    if (!s.empty()) s += ", ";
    s += "H~" + std::to_string(m) + " = " + h.at(m).to_string();
  }
  return s.empty() ? "trivial" : s;
}

bool profile_is(const HomologyProfile& h, int m, std::uint64_t rank) {
  HomologyProfile want(true);
  want.set(m, AbelianGroup::free(rank));
  return h.same_groups(want);
}

// Step 3 onward for one choice of S4 class. Returns false on any failed check.
bool finish_pipeline(const SubgroupTable& t, const Poset& q1, const std::vector<SubgroupId>& thin,
                     SubgroupId s, PipelineReport& r) {
  bool ok = true;
  const MeetOracle meet = subgroup_meet_oracle(t);

  PipelineStep step;
  step.name = "remove six subgroups of one S4 class";
  step.size_before = q1.size();
  std::vector<Element> m;
  for (SubgroupId h : thin) m.push_back(*q1.find_tag(h));
  const auto d = remove_antichain(q1, m);
  bool fibers_ok = true;
  for (const auto& sm : d.summands) {
    const auto f = sm.lower.f_vector();
    const std::int64_t chi = reduced_euler(sm.lower);
    const auto h = reduced_homology(sm.lower);
    const bool good = chi == -8 && profile_is(h, 1, 8) && sm.upper.empty();
    fibers_ok = fibers_ok && good;
    std::string fv;
    for (auto x : f) fv += (fv.empty() ? "" : ", ") + std::to_string(x);
    step.details.push_back(sm.label + ": lower fiber f-vector (" + fv + "), reduced Euler " + std::to_string(chi) +
                           ", " + describe(h));
  }
  const auto check = verify_wedge_homology(q1, d);
  step.before = check.whole;
  step.after = check.remainder;
  step.isolated = check.isolated;
  step.size_after = d.remainder.size();
  step.verified = check.equal && fibers_ok && profile_is(check.isolated, 2, 48) && check.remainder.trivial();
  step.details.push_back("isolated: " + describe(check.isolated));
  step.details.push_back("remainder: " + describe(check.remainder));
  ok = ok && step.verified;
  r.steps.push_back(step);

  PipelineStep again;
  again.name = "coatom-meet reduction of the remainder";
  again.size_before = d.remainder.size();
  const Poset q3 = coatom_meet_reduction(d.remainder, meet);
  again.size_after = q3.size();
  again.before = step.after;
  again.after = reduced_homology(q3);
  again.verified = again.before.same_groups(again.after);
  r.final_trivial = again.after.trivial();
  ok = ok && again.verified && r.final_trivial;

  const auto bounded = with_bounds(q3);
  const auto s_elem = q3.find_tag(s);
  r.kept_subgroup = t.type_name(s) + "#" + std::to_string(s);
  if (!s_elem) {
    again.details.push_back("S = " + r.kept_subgroup + " is not in the reduced poset");
    r.complement_empty = false;
  } else {
    try {
      const auto lattice = as_bounded_lattice(bounded);
      const auto comp = complements(lattice, *s_elem + 1);
      r.complement_empty = comp.empty();
      again.details.push_back("S = " + r.kept_subgroup + ", |S^perp| = " + std::to_string(comp.size()));
    } catch (const NotALattice& e) {
      again.details.push_back(std::string("reduced poset with bounds is not a lattice: ") + e.what());
      r.complement_empty = false;
    }
  }
  ok = ok && r.complement_empty;
  again.verified = again.verified && r.final_trivial && r.complement_empty;
  r.steps.push_back(again);
  return ok;
}

}  // namespace

PipelineReport psl27_pipeline(const SubgroupTable& t, const PipelineOptions& options) {
  PipelineReport r;
  if (t.group_order() != 168 || t.type_name(t.whole()) != "PSL27") {
    throw InputError("the pipeline expects the subgroup table of PSL(2,7)");
  }
  const GroupPoset lattice = subgroup_lattice_proper(t);
  r.direct = reduced_homology(lattice.poset);
  if (options.skip_reduction) {
    r.final_trivial = false;
    r.success = r.direct.support() == std::vector<int>{1, 2} && r.direct.rank(1) == 48 &&
                r.direct.rank(2) == 48 && r.direct.torsion_free();
    return r;
  }
  const MeetOracle meet = subgroup_meet_oracle(t);

  PipelineStep first;
  first.name = "coatom-meet reduction";
  first.size_before = lattice.poset.size();
  const Poset q = coatom_meet_reduction(lattice.poset, meet);
  first.size_after = q.size();
  first.before = r.direct;
  first.after = reduced_homology(q);
  std::set<std::string> kept_types;
  std::set<std::string> all_types;
  for (Element e = 0; e < q.size(); ++e) kept_types.insert(t.type_name(static_cast<SubgroupId>(q.tag(e))));
  for (Element e = 0; e < lattice.poset.size(); ++e) {
    const auto h = static_cast<SubgroupId>(lattice.poset.tag(e));
    if (!q.find_tag(h)) all_types.insert(t.type_name(h));
  }
  r.dropped_types.assign(all_types.begin(), all_types.end());
  const bool idempotent = coatom_meet_reduction(q, meet).size() == q.size();
  first.verified = first.before.same_groups(first.after) && idempotent;
  first.details.push_back("dropped types: " + [&] {
    std::string s;
    for (const auto& x : r.dropped_types) s += (s.empty() ? "" : ", ") + x;
    return s;
  }());
  first.details.push_back(idempotent ? "second application changes nothing" : "second application is not idempotent");
  r.steps.push_back(first);

  PipelineStep second;
  second.name = "remove the F21 subgroups";
  second.size_before = q.size();
  const auto f21 = elements_of_type(t, q, "F21");
  const auto maximal = q.maximal_elements();
  bool all_maximal = std::all_of(f21.begin(), f21.end(), [&](Element e) {
    return std::find(maximal.begin(), maximal.end(), e) != maximal.end();
  });
  const auto d = remove_antichain(q, f21);
  bool fibers_ok = all_maximal && f21.size() == 8;
  for (const auto& s : d.summands) {
    fibers_ok = fibers_ok && s.lower.dimension() == 0 && s.lower.count(0) == 7 && s.upper.empty();
  }
  const auto check = verify_wedge_homology(q, d);
  second.before = check.whole;
  second.after = check.remainder;
  second.isolated = check.isolated;
  second.size_after = d.remainder.size();
  r.euler_after_first_removal = reduced_euler(d.remainder);
  second.verified = check.equal && fibers_ok && profile_is(check.isolated, 1, 48) && r.euler_after_first_removal == 48;
  second.details.push_back(std::to_string(f21.size()) + " F21 subgroups, each maximal with a lower fiber of " +
                           (fibers_ok ? "7 points" : "unexpected shape"));
  second.details.push_back("isolated: " + describe(check.isolated));
  second.details.push_back("reduced Euler characteristic of the remainder: " +
                           std::to_string(r.euler_after_first_removal));
  r.steps.push_back(second);
  bool ok = first.verified && second.verified;

  // S4 classes present in the remainder, ordered by smallest member id.
  std::vector<std::vector<SubgroupId>> s4_classes;
  for (const auto& cls : t.classes()) {
    if (t.type_name(cls.front()) != "S4") continue;
    const bool present = std::all_of(cls.begin(), cls.end(), [&](SubgroupId h) { return d.remainder.find_tag(h).has_value(); });
    if (present) s4_classes.push_back(cls);
  }
  std::vector<std::size_t> candidates;
  if (options.thin_class) {
    if (*options.thin_class >= s4_classes.size()) throw InputError("no such S4 class index");
    candidates.push_back(*options.thin_class);
  } else {
    for (std::size_t i = 0; i < s4_classes.size(); ++i) candidates.push_back(i);
  }

  const std::size_t prefix = r.steps.size();
  bool finished = false;
  for (std::size_t c : candidates) {
    r.steps.resize(prefix);
    const auto& cls = s4_classes[c];
    SubgroupId s = cls.front();
    if (options.mismatched_complement) {
      for (std::size_t other = 0; other < s4_classes.size(); ++other) {
        if (other != c) {
          s = s4_classes[other].front();
          break;
        }
      }
    }
    std::vector<SubgroupId> thin;
    for (SubgroupId h : cls) {
      if (h != cls.front()) thin.push_back(h);
    }
    const bool passed = finish_pipeline(t, d.remainder, thin, s, r);
    r.attempts.push_back("S4 class " + std::to_string(c) + " (smallest member #" + std::to_string(cls.front()) +
                         "): " + (passed ? "verified" : "failed"));
    r.thinned_class = c;
    if (passed) {
      finished = true;
      break;
    }
  }
  r.success = ok && finished;
  return r;
}

PipelineReport psl27_pipeline(const PipelineOptions& options) {
  const auto g = catalog_group("PSL27");
  const auto t = SubgroupTable::enumerate(g);
  return psl27_pipeline(t, options);
}

}  // namespace grouplat
