#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "grouplat/errors.hpp"
#include "grouplat/group_posets.hpp"
#include "grouplat/groups.hpp"
#include "grouplat/homology.hpp"
#include "grouplat/reduce.hpp"
#include "support.hpp"

using namespace grouplat;
using namespace testsupport;

namespace {

std::set<std::string> type_set(const SubgroupTable& t, const Poset& p) {
  std::set<std::string> out;
  for (Element e = 0; e < p.size(); ++e) out.insert(t.type_name(static_cast<SubgroupId>(p.tag(e))));
  return out;
}

}  // namespace

TEST_CASE("coatom-meet reduction on small lattices", "[reduce]") {
  SECTION("proper part of B3 is already reduced") {
    const Poset b3 = boolean_proper_part(3);
    CHECK(coatom_meet_reduction(b3).size() == b3.size());
  }
  SECTION("an antichain is unchanged") {
    CHECK(coatom_meet_reduction(antichain_poset(2)).size() == 2);
  }
  SECTION("a chain collapses to its top") {
    const Poset r = coatom_meet_reduction(chain_poset(4));
    REQUIRE(r.size() == 1);
    CHECK(r.label(0) == "x3");
  }
  SECTION("posets that are not lattices are refused") {
    CHECK_THROWS_AS(coatom_meet_reduction(complete_bipartite(2, 2)), MeetUnavailable);
  }
  SECTION("meet oracle must be able to answer") {
    MeetOracle none = [](std::uint64_t, std::uint64_t) -> std::optional<std::uint64_t> {
      return std::uint64_t{999};
    };
    Poset p = antichain_poset(2);
    p.set_tags({0, 1});
    CHECK_THROWS_AS(coatom_meet_reduction(p, none), MeetUnavailable);
  }
}

TEST_CASE("coatom-meet reduction preserves homology and is idempotent", "[reduce][property]") {
  for (const auto& name : catalog_names()) {
    INFO(name);
    const auto t = SubgroupTable::enumerate(catalog_group(name));
    const Poset l = subgroup_lattice_proper(t).poset;
    const auto meet = subgroup_meet_oracle(t);
    const Poset once = coatom_meet_reduction(l, meet);
    const Poset twice = coatom_meet_reduction(once, meet);
    CHECK(twice.labels() == once.labels());
    CHECK(reduced_homology(once).same_groups(reduced_homology(l)));
    // Meets of coatoms are closed under pairwise meets.
    for (Element a = 0; a < once.size(); ++a) {
      for (Element b = 0; b < once.size(); ++b) {
        const auto m = meet(once.tag(a), once.tag(b));
        if (m) CHECK(once.find_tag(*m).has_value());
      }
    }
  }
}

TEST_CASE("PSL(2,7) coatom reduction drops exactly A4, Z4, Z7", "[reduce][psl27]") {
  const auto t = SubgroupTable::enumerate(catalog_group("PSL27"));
  const Poset l = subgroup_lattice_proper(t).poset;
  const Poset q = coatom_meet_reduction(l, subgroup_meet_oracle(t));
  std::set<std::string> dropped;
  for (const auto& ty : type_set(t, l)) {
    if (!type_set(t, q).count(ty)) dropped.insert(ty);
  }
  CHECK(dropped == std::set<std::string>{"A4", "Z4", "Z7"});
  CHECK(q.size() == 134);
}

TEST_CASE("antichain removal", "[reduce]") {
  const Poset b3 = boolean_proper_part(3);
  SECTION("empty antichain") {
    const auto d = remove_antichain(b3, {});
    CHECK(d.summands.empty());
    CHECK(d.remainder.size() == b3.size());
    CHECK(verify_wedge_homology(b3, d).equal);
  }
  SECTION("comparable elements are refused") {
    const std::vector<Element> m{*b3.find("s1"), *b3.find("s3")};
    CHECK_THROWS_AS(remove_antichain(b3, m), NotAnAntichain);
  }
  SECTION("one coatom of the hexagon") {
    const std::vector<Element> m{*b3.find("s3")};
    const auto d = remove_antichain(b3, m);
    REQUIRE(d.summands.size() == 1);
    CHECK(d.summands[0].lower.vertex_count() == 2);
    CHECK(d.summands[0].upper.empty());
    const auto check = verify_wedge_homology(b3, d);
    CHECK(check.equal);
    CHECK(check.remainder.trivial());
    CHECK(check.isolated.at(1) == AbelianGroup::free(1));
  }
}

TEST_CASE("wedge formula holds for removable antichains", "[reduce][property]") {
  std::mt19937_64 rng(7);
  int applicable = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Poset p = random_layered_poset(rng, 16);
    const auto maxes = p.maximal_elements();
    if (maxes.empty()) continue;
    std::vector<Element> m{maxes.front()};
    const auto d = remove_antichain(p, m);
    for (const auto& s : d.summands) {
      const auto lower = order_complex(p.strictly_below(s.m));
      const auto upper = order_complex(p.strictly_above(s.m));
      CHECK(s.lower.dimension() == lower.dimension());
      CHECK(s.upper.dimension() == upper.dimension());
      CHECK(join(s.lower, s.upper).dimension() == s.lower.dimension() + s.upper.dimension() + 1);
    }
    // When P_{<m} lies in the closed down-set of another element z, it is
    // contractible inside the remainder and the formula must hold.
    bool coned = false;
    for (Element z = 0; z < p.size() && !coned; ++z) {
      if (z == m[0]) continue;
      Bits cone = p.below(z);
      cone.set(z);
      coned = p.below(m[0]).is_subset_of(cone);
    }
    if (coned) {
      CHECK(verify_wedge_homology(p, d).equal);
      ++applicable;
    }
  }
  CHECK(applicable > 0);
}

TEST_CASE("removing maximal elements of a lattice leaves a lattice", "[reduce][property]") {
  for (const char* name : {"S3", "D8", "Q8", "A4", "S4", "A5"}) {
    INFO(name);
    const auto t = SubgroupTable::enumerate(catalog_group(name));
    const Poset l = subgroup_lattice_proper(t).poset;
    const auto maxes = l.maximal_elements();
    const std::vector<Element> first{maxes.front()};
    const Poset rest = remove_antichain(l, first).remainder;
    CHECK_NOTHROW(as_bounded_lattice(with_bounds(rest)));
  }
}

TEST_CASE("PSL(2,7) pipeline", "[reduce][psl27]") {
  const auto t = SubgroupTable::enumerate(catalog_group("PSL27"));
  SECTION("default run") {
    const auto r = psl27_pipeline(t);
    CHECK(r.success);
    CHECK(r.direct.at(1) == AbelianGroup::free(48));
    CHECK(r.direct.at(2) == AbelianGroup::free(48));
    CHECK(r.direct.support() == std::vector<int>{1, 2});
    CHECK(r.euler_after_first_removal == 48);
    CHECK(r.complement_empty);
    CHECK(r.final_trivial);
    std::vector<std::string> dropped = r.dropped_types;
    std::sort(dropped.begin(), dropped.end());
    CHECK(dropped == std::vector<std::string>{"A4", "Z4", "Z7"});
    for (const auto& step : r.steps) {
      INFO(step.name);
      CHECK(step.verified);
    }
  }
  SECTION("either S4 class works") {
    for (std::size_t cls : {0, 1}) {
      PipelineOptions o;
      o.thin_class = cls;
      CHECK(psl27_pipeline(t, o).success);
    }
  }
  SECTION("a mismatched complement fails") {
    PipelineOptions o;
    o.mismatched_complement = true;
    const auto r = psl27_pipeline(t, o);
    CHECK_FALSE(r.success);
    CHECK_FALSE(r.complement_empty);
  }
  SECTION("direct homology only") {
    PipelineOptions o;
    o.skip_reduction = true;
    const auto r = psl27_pipeline(t, o);
    CHECK(r.success);
    CHECK(r.steps.empty());
  }
}
