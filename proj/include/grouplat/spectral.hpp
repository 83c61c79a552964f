#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grouplat/homology.hpp"
#include "grouplat/poset.hpp"

namespace grouplat {

// Reduced homology of every lower fiber P_{<h}, indexed by element. When
// `keys` is given, elements with equal keys are assumed to have isomorphic
// fibers and only one of each is computed.
std::vector<HomologyProfile> fiber_homologies(const Poset& p, const std::vector<std::uint64_t>* keys = nullptr,
                                              std::size_t jobs = 1);

// First page of the spectral sequence of a filtration. Cells that are zero
// are not stored.
struct E1Page {
  int n = -1;  // last filtration index
  std::map<std::pair<int, int>, AbelianGroup> cells;

  const AbelianGroup& at(int k, int l) const;
  // Sum of free ranks on the diagonal k + l = m.
  std::uint64_t diagonal_rank(int m) const;
  // Alternating sum of all free ranks; equals the unreduced Euler
  // characteristic of the filtered complex.
  std::int64_t euler_characteristic() const;
  std::string to_string() const;
};

// Level filtration: E1[0,0] = Z^|P^0| and E1[k,l] is the sum over h in P^k
// of the reduced H_{k+l-1}(P_{<h}).
E1Page e1_page(const Poset& p, const std::vector<HomologyProfile>& fibers);
E1Page e1_page(const Poset& p);

// Filtration whose stage 0 is an arbitrary down-set R and whose later
// stages add one antichain each. E1[0,l] is the unreduced H_l(R). Throws
// InputError if the stages do not form such a filtration.
E1Page e1_page_staged(const Poset& p, const std::vector<Bits>& stages);

// Relative homology of (Delta P^{<=k}, Delta P^{<=k-1}) for k >= 1 and the
// direct sum of the fibers' homology shifted up by one, side by side.
struct FiltrationQuotientCheck {
  int k = 0;
  HomologyProfile relative;
  HomologyProfile wedge_formula;
  bool equal = false;
};
std::vector<FiltrationQuotientCheck> check_filtration_quotients(const Poset& p,
                                                                const std::vector<HomologyProfile>& fibers);

// Diagonal totals D_j = sum_h rank H~_{j-1}(P_{<h}) with multiplicities,
// the input every bound below is computed from.
class FiberStatistics {
public:
  FiberStatistics() = default;
  // (profile, multiplicity) pairs.
  explicit FiberStatistics(std::vector<std::pair<HomologyProfile, std::uint64_t>> weighted);
  static FiberStatistics of(const std::vector<HomologyProfile>& fibers);

  // sum of multiplicity * rank H~_j(fiber).
  std::uint64_t rank_sum(int j) const;
  bool all_zero(int j) const;
  bool all_torsion_free(int j) const;
  // Largest fiber Hdim; -1 when every fiber is acyclic except in degree -1,
  // and when there are no fibers at all.
  int max_hdim() const;
  // Reduced Euler characteristic of P itself: every chain is its top
  // element h over a chain of P_{<h}, so chi~(P) = -1 - sum_h chi~(P_{<h}).
  std::int64_t poset_reduced_euler() const;
  const std::vector<std::pair<HomologyProfile, std::uint64_t>>& weighted() const { return weighted_; }

private:
  std::vector<std::pair<HomologyProfile, std::uint64_t>> weighted_;
};

// rank H_m(P) <= sum_h rank H~_{m-1}(P_{<h}) (unreduced H_m). At m = 0 this
// is |P^0| because only minimal elements have empty fibers.
std::uint64_t betti_upper(const FiberStatistics& s, int m);
std::uint64_t betti_upper(const Poset& p, int m);

// rank H_m(P) >= D_m - D_{m+1} - D_{m-1} with D_j the diagonal totals
// (unreduced H_m). May be negative.
std::int64_t betti_lower(const FiberStatistics& s, int m);
std::int64_t betti_lower(const Poset& p, int m);

// Exact reduced ranks the caller knows from elsewhere, such as connectivity.
using KnownFacts = std::map<int, std::uint64_t>;
KnownFacts parse_known_facts(const std::string& text);  // "0=0,1=0"

struct BoundRow {
  int m = 0;
  std::int64_t lower_raw = 0;    // reduced-rank lower bound before clamping
  std::uint64_t lower = 0;       // clamped at zero, raised by known facts
  std::uint64_t upper_sum = 0;   // the fiber sum itself, shifted to reduced rank
  std::uint64_t upper = 0;       // reduced-rank upper bound after refinements
  bool vanishes = false;         // concluded H~_m = 0
  bool torsion_free = false;     // concluded H~_m torsion-free
  std::optional<std::uint64_t> known;
  std::optional<std::uint64_t> actual;
};

struct Conclusion {
  std::string statement;
  std::string hypothesis;
};

struct BoundTable {
  int dimension = -1;
  int hdim_bound = -1;  // 1 + max fiber Hdim
  std::vector<BoundRow> rows;  // m = 0 .. dimension + 1
  std::vector<Conclusion> ledger;
  std::optional<std::int64_t> reduced_euler;
};

// Bounds on reduced ranks for m = 0..max_m from fiber statistics. The
// unreduced-to-reduced shift at m = 0 applies to nonempty posets.
// When the reduced Euler characteristic is given, a rank whose every other
// rank is known exactly is pinned by it.
BoundTable bound_table(const FiberStatistics& s, int max_m, bool nonempty, const KnownFacts& facts = {},
                       std::optional<std::int64_t> reduced_euler = std::nullopt);

// Conclusions of the vanishing/torsion theorem at dimension m, as ledger lines.
struct VanishingReport {
  int m = 0;
  bool fibers_vanish = false;           // all H~_m(P_{<h}) = 0
  bool implies_vanishing = false;       // then H_{m+1}(P) = 0
  bool fibers_torsion_free = false;     // all H~_{m-1}(P_{<h}) torsion-free
  bool implies_torsion_free = false;    // both hold, so H_m(P) is torsion-free
  int hdim_bound = -1;
};
VanishingReport vanishing_and_torsion(const FiberStatistics& s, int m);

}  // namespace grouplat
