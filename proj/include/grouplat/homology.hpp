#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grouplat/lattice.hpp"
#include "grouplat/simplicial.hpp"

namespace grouplat {

// Finitely generated abelian group Z^rank + Z/t1 + ... with t1 | t2 | ...
struct AbelianGroup {
  std::uint64_t rank = 0;
  std::vector<std::int64_t> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  bool torsion_free() const { return torsion.empty(); }

  // Direct sum, renormalized to invariant factors.
  AbelianGroup& operator+=(const AbelianGroup& other);
  // n-fold direct sum.
  AbelianGroup repeated(std::uint64_t n) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  // "0", "Z^3", "Z + Z/2", ...
  std::string to_string() const;
  static AbelianGroup parse(const std::string& text);
  static AbelianGroup free(std::uint64_t rank) { return {rank, {}}; }
};

// Integer homology, dimension by dimension. Reduced profiles of the empty
// complex have Z in dimension -1 and nothing else.
class HomologyProfile {
public:
  HomologyProfile() = default;
  explicit HomologyProfile(bool reduced) : reduced_(reduced) {}

  bool reduced() const { return reduced_; }
  const AbelianGroup& at(int m) const;
  void set(int m, AbelianGroup g);
  const std::map<int, AbelianGroup>& groups() const { return groups_; }

  // Dimensions with a nonzero group.
  std::vector<int> support() const;
  bool trivial() const { return support().empty(); }
  bool torsion_free() const;
  std::uint64_t rank(int m) const { return at(m).rank; }
  std::int64_t euler_characteristic() const;

  // Componentwise direct sum.
  HomologyProfile& operator+=(const HomologyProfile& other);
  // Shifts every group up by `k` dimensions.
  HomologyProfile shifted(int k) const;

  // Equal as graded groups; absent dimensions count as zero.
  bool same_groups(const HomologyProfile& other) const;

  // One line per dimension: "H~[1] = Z^60".
  std::string to_string() const;

private:
  bool reduced_ = true;
  std::map<int, AbelianGroup> groups_;
};

// H_k = ker d_k / im d_{k+1}. With `reduced`, the augmentation C_0 -> Z is
// added (ignored for relative complexes). Throws InvalidComplex when the
// boundary maps do not compose to zero.
HomologyProfile homology(const ChainComplex& c, bool reduced);

// Relative homology of the chain complex of a pair.
HomologyProfile relative_homology(const ChainComplex& pair);

HomologyProfile reduced_homology(const SimplicialComplex& x);
HomologyProfile reduced_homology(const Poset& p);

// Sum of (-1)^k f_k minus one; -1 for the empty complex.
std::int64_t reduced_euler(const SimplicialComplex& x);
std::int64_t reduced_euler(const Poset& p);

// Mobius function mu(bottom, top) by the recursive definition.
std::int64_t mobius_bottom_top(const BoundedLattice& l);

// Largest m with a nonzero reduced group; -1 if none.
int hdim(const HomologyProfile& h);

}  // namespace grouplat
