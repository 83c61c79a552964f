#include <catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "grouplat/errors.hpp"
#include "grouplat/homology.hpp"
#include "grouplat/lattice.hpp"
#include "grouplat/simplicial.hpp"
#include "grouplat/snf.hpp"
#include "support.hpp"

using namespace grouplat;
using namespace testsupport;

namespace {

SimplicialComplex rp2() {
  std::vector<std::vector<Vertex>> t{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                     {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  return SimplicialComplex::from_simplices(6, t);
}

SimplicialComplex torus7() {
  std::vector<std::vector<Vertex>> t;
  for (Vertex i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_simplices(7, t);
}

SimplicialComplex random_complex(std::mt19937_64& rng, Vertex max_vertices = 8) {
  std::uniform_int_distribution<Vertex> vdist(1, max_vertices);
  const Vertex n = vdist(rng);
  std::uniform_int_distribution<int> count(1, 12);
  std::uniform_int_distribution<int> width(1, 4);
  std::vector<std::vector<Vertex>> simplices;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(width(rng))));
    simplices.push_back(all);
  }
  return SimplicialComplex::from_simplices(n, simplices);
}

// gcd of all k x k minors, by cofactor expansion; fine for tiny matrices.
mpz_class det(const std::vector<std::vector<std::int64_t>>& m, std::vector<int> rows, std::vector<int> cols) {
  if (rows.size() == 1) return m[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(cols[0])];
  mpz_class sum = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto rest = cols;
    rest.erase(rest.begin() + static_cast<long>(j));
    std::vector<int> rrest(rows.begin() + 1, rows.end());
    mpz_class term = m[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(cols[j])] * det(m, rrest, rest);
    sum += j % 2 == 0 ? term : mpz_class(-term);
  }
  return sum;
}

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    out.push_back(s);
  }
}

std::vector<mpz_class> invariant_factors_by_minors(const std::vector<std::vector<std::int64_t>>& m) {
  const int r = static_cast<int>(m.size());
  const int c = static_cast<int>(m.front().size());
  std::vector<mpz_class> divisors{1};
  for (int k = 1; k <= std::min(r, c); ++k) {
    std::vector<std::vector<int>> rs, cs;
    subsets(r, k, rs);
    subsets(c, k, cs);
    mpz_class g = 0;
    for (const auto& a : rs) {
      for (const auto& b : cs) {
        mpz_class d = det(m, a, b);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<mpz_class> factors;
  for (std::size_t i = 1; i < divisors.size(); ++i) factors.push_back(divisors[i] / divisors[i - 1]);
  return factors;
}

}  // namespace

TEST_CASE("abelian group arithmetic", "[homology]") {
  AbelianGroup a{1, {2}};
  a += AbelianGroup{0, {3}};
  CHECK(a == AbelianGroup{1, {6}});
  CHECK(a.to_string() == "Z + Z/6");
  CHECK(AbelianGroup::parse("Z^3 + Z/2 + Z/4") == AbelianGroup{3, {2, 4}});
  CHECK(AbelianGroup::parse("0").is_zero());
  CHECK(AbelianGroup{0, {2}}.repeated(3) == AbelianGroup{0, {2, 2, 2}});
  CHECK_THROWS_AS(AbelianGroup::parse("Q^2"), ParseError);
}

TEST_CASE("smith normal form matches determinantal divisors", "[snf]") {
  CHECK(smith_normal_form(std::vector<std::vector<std::int64_t>>{{2, 4}, {6, 8}}).factors ==
        std::vector<Integer>{2, 4});
  CHECK(smith_normal_form(std::vector<std::vector<std::int64_t>>{{0, 0}, {0, 0}}).rank() == 0);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<std::int64_t> entry(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = dim(rng), c = dim(rng);
    std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(r), std::vector<std::int64_t>(static_cast<std::size_t>(c)));
    for (auto& row : m) {
      for (auto& v : row) v = entry(rng) * (trial % 3 == 0 ? 1 : (trial % 3) * 2);
    }
    const auto got = smith_normal_form(m);
    const auto want = invariant_factors_by_minors(m);
    REQUIRE(got.factors == want);
    for (std::size_t i = 1; i < got.factors.size(); ++i) CHECK(got.factors[i] % got.factors[i - 1] == 0);
  }
}

TEST_CASE("smith normal form survives 64-bit overflow", "[snf]") {
  const std::int64_t big = std::int64_t{1} << 40;
  std::vector<std::vector<std::int64_t>> m{{big, 1}, {0, big}};
  const auto r = smith_normal_form(m);
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0] == 1);
  CHECK(r.factors[1] == mpz_class(big) * mpz_class(big));
}

TEST_CASE("homology of standard complexes", "[homology]") {
  SECTION("spheres") {
    for (int d = 0; d <= 4; ++d) {
      const auto h = reduced_homology(sphere(d));
      CHECK(h.support() == std::vector<int>{d});
      CHECK(h.at(d) == AbelianGroup::free(1));
    }
  }
  SECTION("empty complex") {
    const auto h = reduced_homology(SimplicialComplex{});
    CHECK(h.support() == std::vector<int>{-1});
    CHECK(reduced_euler(SimplicialComplex{}) == -1);
  }
  SECTION("points") {
    CHECK(reduced_homology(points(5)).at(0) == AbelianGroup::free(4));
  }
  SECTION("projective plane has Z/2") {
    const auto h = reduced_homology(rp2());
    CHECK(h.support() == std::vector<int>{1});
    CHECK(h.at(1) == AbelianGroup{0, {2}});
    CHECK(agrees_with_oracle(h, faces_of_complex(rp2())));
    CHECK(reduced_homology(suspension(rp2())).at(2) == AbelianGroup{0, {2}});
  }
  SECTION("torus") {
    const auto h = reduced_homology(torus7());
    CHECK(h.at(1) == AbelianGroup::free(2));
    CHECK(h.at(2) == AbelianGroup::free(1));
    CHECK(torus7().f_vector() == std::vector<std::size_t>{7, 21, 14});
  }
  SECTION("3-chain is a cone") {
    CHECK(reduced_homology(chain_poset(3)).trivial());
  }
}

TEST_CASE("random complexes agree with the dense oracle", "[homology][property]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const auto x = random_complex(rng);
    const auto h = reduced_homology(x);
    std::string why;
    INFO(x.dump());
    REQUIRE(agrees_with_oracle(h, faces_of_complex(x), &why));
    CHECK(h.euler_characteristic() == reduced_euler(x));
    CHECK(chain_complex(x).boundary_squares_to_zero());
  }
}

TEST_CASE("order complexes agree with brute-force chains", "[simplicial][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const Poset p = random_small_poset(rng);
    const auto x = order_complex(p);
    const auto f = x.f_vector();
    CHECK(std::vector<std::uint64_t>(f.begin(), f.end()) == chain_counts_by_brute_force(p));
    CHECK(chain_counts(p) == chain_counts_by_brute_force(p));
    std::string why;
    REQUIRE(agrees_with_oracle(reduced_homology(p), faces_of_poset(p), &why));
  }
}

TEST_CASE("join, suspension and wedge", "[simplicial][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = random_complex(rng, 6);
    const auto y = random_complex(rng, 5);
    const auto hx = reduced_homology(x);
    const auto hy = reduced_homology(y);

    const auto hs = reduced_homology(suspension(x));
    CHECK(hs.same_groups(hx.shifted(1)));

    // Rational Kunneth for joins: b~_{n+1}(X*Y) = sum_{i+j=n} b~_i(X) b~_j(Y).
    const auto xy = join(x, y);
    CHECK(xy.dimension() == x.dimension() + y.dimension() + 1);
    const auto hj = reduced_homology(xy);
    for (int n = -2; n <= xy.dimension(); ++n) {
      std::uint64_t expect = 0;
      for (int i = -1; i <= n + 1; ++i) expect += hx.rank(i) * hy.rank(n - i);
      CHECK(hj.rank(n + 1) == expect);
    }

    std::vector<SimplicialComplex> parts{x, y};
    auto sum = hx;
    sum += hy;
    sum.set(-1, AbelianGroup{});
    CHECK(reduced_homology(wedge(parts)).same_groups(sum));
  }
  std::vector<SimplicialComplex> empty_part{sphere(1), SimplicialComplex{}};
  CHECK_THROWS_AS(wedge(empty_part), EmptySummand);
}

TEST_CASE("relative homology", "[homology]") {
  SECTION("disk rel boundary is a sphere") {
    const auto disk = SimplicialComplex::from_simplices(3, {{0, 1, 2}});
    const auto rel = relative_homology(relative_chain_complex(disk, sphere(1)));
    CHECK(rel.support() == std::vector<int>{2});
    CHECK(rel.at(2) == AbelianGroup::free(1));
  }
  SECTION("Euler characteristic is additive on pairs") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
      const Poset p = random_small_poset(rng, 10);
      const auto l = level_decomposition(p);
      if (l.top() < 1) continue;
      const auto big = order_complex(p);
      const auto small = order_complex(p, l.up_to(p.size(), l.top() - 1));
      const auto rel = relative_homology(relative_chain_complex(big, small));
      CHECK(rel.euler_characteristic() == reduced_euler(big) - reduced_euler(small));
    }
  }
  SECTION("subcomplex check") {
    CHECK_THROWS_AS(relative_chain_complex(sphere(1), sphere(2)), NotASubcomplex);
  }
}

TEST_CASE("Mobius function equals the reduced Euler characteristic", "[homology][lattice][property]") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<unsigned> sub(0, 63);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<unsigned> family{0, 63};
    for (int i = 0; i < 6; ++i) family.insert(sub(rng));
    bool grew = true;
    while (grew) {
      grew = false;
      for (unsigned a : std::vector<unsigned>(family.begin(), family.end())) {
        for (unsigned b : std::vector<unsigned>(family.begin(), family.end())) grew |= family.insert(a & b).second;
      }
    }
    std::vector<unsigned> sets(family.begin(), family.end());
    std::vector<std::string> labels;
    std::vector<std::pair<Element, Element>> pairs;
    for (unsigned s : sets) labels.push_back("m" + std::to_string(s));
    for (Element a = 0; a < sets.size(); ++a) {
      for (Element b = 0; b < sets.size(); ++b) {
        if (a != b && (sets[a] & sets[b]) == sets[a]) pairs.emplace_back(a, b);
      }
    }
    const Poset full = Poset::from_pairs(labels, pairs);
    // mu(0, x) by the defining recursion, with elements in increasing mask order.
    std::vector<std::int64_t> mu(sets.size(), 0);
    mu[0] = 1;
    for (std::size_t x = 1; x < sets.size(); ++x) {
      for (std::size_t y = 0; y < x; ++y) {
        if ((sets[y] & sets[x]) == sets[y]) mu[x] -= mu[y];
      }
    }
    const BoundedLattice l = as_bounded_lattice(full);
    CHECK(mobius_bottom_top(l) == mu.back());
    CHECK(reduced_euler(l.proper_part()) == mu.back());
    CHECK(reduced_homology(l.proper_part()).euler_characteristic() == mu.back());
  }
}
