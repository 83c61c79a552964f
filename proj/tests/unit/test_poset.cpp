#include <catch_amalgamated.hpp>

#include "grouplat/errors.hpp"
#include "grouplat/lattice.hpp"
#include "grouplat/poset.hpp"
#include "support.hpp"

using namespace grouplat;
using namespace testsupport;

TEST_CASE("poset construction from pairs", "[poset]") {
  SECTION("singleton") {
    const Poset p = Poset::from_pairs({"a"}, {});
    CHECK(p.size() == 1);
    CHECK(p.maximal_elements() == std::vector<Element>{0});
  }
  SECTION("transitivity is inferred") {
    const Poset p = chain_poset(3);
    CHECK(p.less(0, 2));
    CHECK_FALSE(p.less(2, 0));
  }
  SECTION("cycles are rejected") {
    std::vector<std::pair<Element, Element>> pairs{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Poset::from_pairs({"a", "b"}, pairs), CycleError);
    std::vector<std::pair<Element, Element>> self{{0, 0}};
    CHECK_THROWS_AS(Poset::from_pairs({"a"}, self), CycleError);
  }
  SECTION("duplicate labels are rejected") {
    CHECK_THROWS_AS(Poset::from_pairs({"a", "a"}, {}), DuplicateLabel);
  }
  SECTION("label pairs must name elements") {
    std::vector<std::pair<std::string, std::string>> pairs{{"a", "z"}};
    CHECK_THROWS_AS(Poset::from_label_pairs({"a", "b"}, pairs), UnknownElement);
  }
}

TEST_CASE("fibers below and above", "[poset]") {
  const Poset c = chain_poset(3);
  CHECK(c.strictly_below(2).size() == 2);
  CHECK(c.strictly_below(0).empty());
  CHECK(c.strictly_above(0).size() == 2);
  CHECK_THROWS_AS(c.strictly_below(7), UnknownElement);

  // Subsets strictly inside {1,2} (mask 3) of the proper part of B3 are {1} and {2}.
  const Poset b3 = boolean_proper_part(3);
  const Element h = *b3.find("s3");
  const Poset below = b3.strictly_below(h);
  std::vector<std::string> expected;
  for (unsigned s = 1; s < 7; ++s) {
    if ((s & 3u) == s && s != 3u) expected.push_back("s" + std::to_string(s));
  }
  CHECK(below.labels() == expected);
  CHECK(below.covering_pairs().empty());
}

TEST_CASE("removal and antichains", "[poset]") {
  const Poset b3 = boolean_proper_part(3);
  const std::vector<Element> atoms = b3.minimal_elements();
  CHECK(atoms.size() == 3);
  CHECK(b3.is_antichain(atoms));
  const Poset rest = b3.remove(atoms);
  CHECK(rest.size() == 3);
  CHECK(rest.covering_pairs().empty());
  const std::vector<Element> comparable{*b3.find("s1"), *b3.find("s3")};
  CHECK_FALSE(b3.is_antichain(comparable));
  CHECK(b3.remove({}).size() == b3.size());
}

TEST_CASE("level decomposition", "[poset]") {
  SECTION("chain") {
    const auto l = level_decomposition(chain_poset(4));
    CHECK(l.top() == 3);
    for (int k = 0; k <= 3; ++k) CHECK(l.levels[static_cast<std::size_t>(k)].size() == 1);
  }
  SECTION("empty poset") { CHECK(level_decomposition(Poset{}).top() == -1); }
  SECTION("levels of random posets are strictly monotone along the order") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      const Poset p = random_layered_poset(rng);
      const auto l = level_decomposition(p);
      std::size_t total = 0;
      for (const auto& level : l.levels) total += level.size();
      REQUIRE(total == p.size());
      for (Element a = 0; a < p.size(); ++a) {
        int longest = 0;
        for (const auto& c : all_chains(p.strictly_below(a))) longest = std::max(longest, static_cast<int>(c.size()));
        CHECK(l.height[a] == longest);
        for (Element b = 0; b < p.size(); ++b) {
          if (p.less(a, b)) CHECK(l.height[a] < l.height[b]);
        }
      }
      const Bits low = l.up_to(p.size(), 1);
      for (Element x = 0; x < p.size(); ++x) CHECK(low.test(x) == (l.height[x] <= 1));
    }
  }
}

TEST_CASE("linear extension respects the order", "[poset]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Poset p = random_layered_poset(rng);
    const auto ext = p.linear_extension();
    std::vector<std::size_t> pos(p.size());
    for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = i;
    for (Element a = 0; a < p.size(); ++a) {
      for (Element b = 0; b < p.size(); ++b) {
        if (p.less(a, b)) CHECK(pos[a] < pos[b]);
      }
    }
  }
}

TEST_CASE("bounded lattices", "[lattice]") {
  const BoundedLattice l = as_bounded_lattice(with_bounds(boolean_proper_part(3)));
  const Poset& q = l.poset();
  CHECK(l.size() == 8);
  auto mask = [&](Element e) -> unsigned {
    if (e == l.bottom()) return 0;
    if (e == l.top()) return 7;
    return static_cast<unsigned>(std::stoul(q.label(e).substr(1)));
  };
  for (Element a = 0; a < l.size(); ++a) {
    CHECK(q.leq(l.bottom(), a));
    CHECK(q.leq(a, l.top()));
    for (Element b = 0; b < l.size(); ++b) {
      CHECK(mask(l.meet(a, b)) == (mask(a) & mask(b)));
      CHECK(mask(l.join(a, b)) == (mask(a) | mask(b)));
    }
  }
  // Complements in B3 are set complements.
  const Element s1 = *q.find("s1");
  const auto comp = complements(l, s1);
  REQUIRE(comp.size() == 1);
  CHECK(mask(comp.front()) == 6u);
  CHECK(l.proper_part().size() == 6);

  SECTION("a bowtie has no meets") {
    const Poset bowtie = complete_bipartite(2, 2);
    CHECK_THROWS_AS(as_bounded_lattice(with_bounds(bowtie)), NotALattice);
    CHECK_THROWS_AS(as_bounded_lattice(bowtie), NotALattice);
  }
}
