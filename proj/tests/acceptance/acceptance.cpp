// Acceptance checks, one line per criterion. Pass --allow-large to include
// the full coset-poset homology of PSL(2,7).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "grouplat/decreasing.hpp"
#include "grouplat/group_bounds.hpp"
#include "grouplat/group_posets.hpp"
#include "grouplat/groups.hpp"
#include "grouplat/homology.hpp"
#include "grouplat/lattice.hpp"
#include "grouplat/reduce.hpp"
#include "grouplat/spectral.hpp"
#include "support.hpp"

using namespace grouplat;

namespace {

constexpr double kA5Seconds = 10.0;
constexpr double kPsl27Seconds = 300.0;
constexpr double kCosetBoundsSeconds = 120.0;
constexpr double kE1CorpusSeconds = 300.0;
constexpr double kLcsSeconds = 30.0;
constexpr int kCorpusSize = 200;
constexpr std::size_t kCorpusMaxElements = 40;
constexpr std::uint64_t kCorpusSeed = 20240611;

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Poset> corpus() {
  std::mt19937_64 rng(kCorpusSeed);
  std::vector<Poset> out;
  for (int i = 0; i < kCorpusSize; ++i) out.push_back(testsupport::random_layered_poset(rng, kCorpusMaxElements));
  return out;
}


Verdict c1_a5() {
  const auto t0 = Clock::now();
  const auto t = SubgroupTable::enumerate(catalog_group("A5"));
  const Poset l = subgroup_lattice_proper(t).poset;
  const auto h = reduced_homology(l);
  const auto faces = reduced_euler(l);
  const auto mu = mobius_bottom_top(as_bounded_lattice(with_bounds(l)));
  const double secs = seconds_since(t0);
  const bool ok = h.support() == std::vector<int>{1} && h.at(1) == AbelianGroup::free(60) && h.at(0).is_zero() &&
                  h.torsion_free() && faces == -60 && mu == -60 && secs < kA5Seconds;
  std::ostringstream os;
  os << "H~1 = " << h.at(1).to_string() << ", chi~ faces " << faces << ", mobius " << mu << ", " << secs << " s";
  return {ok, os.str()};
}

Verdict c2_psl27() {
  const auto t0 = Clock::now();
  const auto t = SubgroupTable::enumerate(catalog_group("PSL27"));
  const Poset l = subgroup_lattice_proper(t).poset;
  const auto h = reduced_homology(l);
  const double secs = seconds_since(t0);
  const bool ok = h.support() == std::vector<int>{1, 2} && h.at(1) == AbelianGroup::free(48) &&
                  h.at(2) == AbelianGroup::free(48) && h.torsion_free() && reduced_euler(l) == 0 &&
                  h.euler_characteristic() == 0 && secs < kPsl27Seconds;
  std::ostringstream os;
  os << "H~1 = " << h.at(1).to_string() << ", H~2 = " << h.at(2).to_string() << ", chi~ " << reduced_euler(l)
     << ", " << secs << " s";
  return {ok, os.str()};
}

Verdict c3_pipeline() {
  const auto r = psl27_pipeline();
  bool steps_ok = !r.steps.empty();
  for (const auto& s : r.steps) steps_ok = steps_ok && s.verified;
  auto dropped = r.dropped_types;
  std::sort(dropped.begin(), dropped.end());
  const bool drops = dropped == std::vector<std::string>{"A4", "Z4", "Z7"};
  bool circles = false, spheres = false;
  for (const auto& s : r.steps) {
    if (s.isolated.support() == std::vector<int>{1} && s.isolated.at(1) == AbelianGroup::free(48)) circles = true;
    if (s.isolated.support() == std::vector<int>{2} && s.isolated.at(2) == AbelianGroup::free(48)) spheres = true;
  }
  const bool ok = r.success && steps_ok && drops && circles && spheres && r.final_trivial && r.complement_empty &&
                  r.euler_after_first_removal == 48;
  std::ostringstream os;
  os << r.steps.size() << " steps verified, dropped A4/Z4/Z7: " << (drops ? "yes" : "no")
     << ", Z^48 in dims 1 and 2 isolated, remainder trivial, complement empty";
  return {ok, os.str()};
}

Verdict c4_coset_bounds() {
  const auto t0 = Clock::now();
  const auto t = SubgroupTable::enumerate(catalog_group("PSL27"));
  GroupBoundsOptions o;
  o.facts = {{0, 0}, {1, 0}};
  const auto r = group_betti_bounds(t, LatticeKind::Cosets, o);
  const double secs = seconds_since(t0);
  const auto& rows = r.table.rows;
  const bool ok = rows.size() > 4 && r.upper(2) == 14616 && r.upper(3) == 11760 && rows[4].vanishes &&
                  rows[3].torsion_free && secs < kCosetBoundsSeconds;
  std::ostringstream os;
  os << "upper(2) = " << r.upper(2) << ", upper(3) = " << r.upper(3) << ", H~4 = 0 "
     << (rows.size() > 4 && rows[4].vanishes ? "concluded" : "not concluded") << ", H~3 torsion-free "
     << (rows.size() > 3 && rows[3].torsion_free ? "concluded" : "not concluded") << ", " << secs << " s";
  return {ok, os.str()};
}

Verdict c5_e1(const std::vector<Poset>& posets) {
  const auto t0 = Clock::now();
  std::size_t checks = 0, failures = 0, sources = 0;
  auto run = [&](const Poset& p) {
    ++sources;
    for (const auto& c : check_filtration_quotients(p, fiber_homologies(p))) {
      ++checks;
      if (!c.equal) ++failures;
    }
  };
  for (const auto& p : posets) run(p);
  for (const auto& name : catalog_names()) run(subgroup_lattice_proper(SubgroupTable::enumerate(catalog_group(name))).poset);
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << checks << " filtration pairs over " << sources << " posets, " << failures << " mismatches, " << secs << " s";
  return {failures == 0 && posets.size() >= 200 && secs < kE1CorpusSeconds, os.str()};
}

Verdict c6_sandwich(const std::vector<Poset>& posets) {
  std::size_t comparisons = 0, violations = 0;
  for (const auto& p : posets) {
    const auto s = FiberStatistics::of(fiber_homologies(p));
    const auto h = reduced_homology(p);
    const int dim = level_decomposition(p).top();
    for (int m = 0; m <= dim + 1; ++m) {
      const auto actual = static_cast<std::int64_t>(h.rank(m) + (m == 0 && !p.empty() ? 1 : 0));
      ++comparisons;
      if (betti_lower(s, m) > actual || actual > static_cast<std::int64_t>(betti_upper(s, m))) ++violations;
    }
  }
  std::ostringstream os;
  os << comparisons << " comparisons, " << violations << " violations";
  return {violations == 0, os.str()};
}

Verdict c7_solvable() {
  std::ostringstream os;
  bool ok = true;
  for (const char* name : {"Z6", "Z12", "D8", "Q8", "S4", "A4", "Z2^3"}) {
    const auto h = reduced_homology(subgroup_lattice_proper(SubgroupTable::enumerate(catalog_group(name))).poset);
    const bool single = h.support().size() <= 1 && h.torsion_free();
    ok = ok && single;
    os << name << ":";
    if (h.support().empty()) os << " contractible";
    for (int m : h.support()) os << " H~" << m << "=" << h.at(m).to_string();
    os << "  ";
  }
  return {ok, os.str()};
}

Verdict c8_decreasing(const std::vector<Poset>& posets) {
  const bool point = is_decreasing(testsupport::chain_poset(1)).decreasing;
  const bool empty = !is_decreasing(Poset{}).decreasing;
  const bool pair = !is_decreasing(testsupport::antichain_poset(2)).decreasing;
  std::size_t violations = 0;
  for (const auto& p : posets) {
    const auto v = is_decreasing(p);
    if (v.hdim > v.dim - v.s || !v.level_bounds_hold) ++violations;
  }
  std::ostringstream os;
  os << "point " << (point ? "decreasing" : "WRONG") << ", empty " << (empty ? "not" : "WRONG") << ", antichain "
     << (pair ? "not" : "WRONG") << ", Hdim <= dim - s violated on " << violations << " of " << posets.size();
  return {point && empty && pair && violations == 0, os.str()};
}

Verdict c9_lcs() {
  const auto t0 = Clock::now();
  std::ostringstream os;
  bool ok = true;
  for (const char* name : {"S3", "Z6"}) {
    const auto t = SubgroupTable::enumerate(catalog_group(name));
    const auto r = lcs_relation_check(t);
    // The corollary with ranks taken straight from the computed homology.
    const int n = r.l_dimension;
    const bool corollary = r.c.rank(n + 1) <= r.group_order * r.l.rank(n);
    ok = ok && r.relative_matches && r.all_hold && corollary;
    os << name << ": relative " << (r.relative_matches ? "matches" : "differs") << ", rank H~" << n + 1
       << "(C) = " << r.c.rank(n + 1) << " <= " << r.group_order * r.l.rank(n) << "  ";
  }
  const double secs = seconds_since(t0);
  os << secs << " s";
  return {ok && secs < kLcsSeconds, os.str()};
}

Verdict c10_full_coset() {
  const auto t0 = Clock::now();
  const auto t = SubgroupTable::enumerate(catalog_group("PSL27"));
  const Poset c = coset_poset(t, false).poset;
  const auto h = reduced_homology(c);
  const double secs = seconds_since(t0);
  const bool ok = h.at(0).is_zero() && h.at(1).is_zero() && h.rank(2) <= 14616 && h.rank(3) <= 11760 &&
                  h.at(3).torsion_free() && h.at(4).is_zero() && h.euler_characteristic() == 2856;
  std::ostringstream os;
  os << c.size() << " elements; H~0 = " << h.at(0).to_string() << ", H~1 = " << h.at(1).to_string()
     << ", H~2 = " << h.at(2).to_string() << ", H~3 = " << h.at(3).to_string() << ", H~4 = " << h.at(4).to_string()
     << ", " << secs << " s";
  return {ok, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  bool allow_large = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--allow-large") == 0) allow_large = true;
  }
  const auto posets = corpus();
  std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"subgroup lattice of A5", c1_a5},
      {"subgroup lattice of PSL(2,7)", c2_psl27},
      {"PSL(2,7) reduction pipeline", c3_pipeline},
      {"coset poset bounds for PSL(2,7)", c4_coset_bounds},
      {"E1 quotients equal wedge formula", [&] { return c5_e1(posets); }},
      {"Betti bounds sandwich", [&] { return c6_sandwich(posets); }},
      {"solvable groups are spherical", c7_solvable},
      {"decreasing classifier", [&] { return c8_decreasing(posets); }},
      {"coset pair sequence", c9_lcs},
      {"full coset poset homology of PSL(2,7)", c10_full_coset},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (id == 10 && !allow_large) {
      std::printf("[SKIP] %2d %s: needs --allow-large\n", id, criteria[i].first.c_str());
      continue;
    }
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("[%s] %2d %s: %s\n", v.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
