#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grouplat/poset.hpp"

namespace grouplat {

using Vertex = std::uint32_t;

// Finite abstract simplicial complex. Simplices are strictly increasing
// vertex tuples stored per dimension in one flat, lexicographically sorted
// array, so lookup is a binary search.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  // Closes `simplices` under faces. Vertex tuples need not be sorted.
  static SimplicialComplex from_simplices(std::size_t vertex_count,
                                          std::vector<std::vector<Vertex>> simplices,
                                          std::vector<std::string> labels = {});

  // Takes ownership of per-dimension flat arrays that are already sorted,
  // deduplicated and closed under faces.
  static SimplicialComplex from_sorted_faces(std::vector<std::string> labels,
                                             std::vector<std::vector<Vertex>> faces);

  // -1 for the empty complex.
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  bool empty() const { return faces_.empty(); }
  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t count(int d) const;
  std::span<const Vertex> simplex(int d, std::size_t i) const {
    const auto w = static_cast<std::size_t>(d) + 1;
    return {faces_[static_cast<std::size_t>(d)].data() + i * w, w};
  }
  std::optional<std::size_t> index_of(std::span<const Vertex> s) const;
  bool contains(std::span<const Vertex> s) const { return index_of(s).has_value(); }

  // f-vector (f_0, f_1, ...).
  std::vector<std::size_t> f_vector() const;

  std::vector<std::vector<Vertex>> maximal_simplices() const;

  // One line per maximal simplex, vertices space separated.
  std::string dump() const;

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> faces_;
};

// Simplices are the chains of p; vertex i is element i.
SimplicialComplex order_complex(const Poset& p);

// Order complex of the subposet on `subset`, keeping p's vertex numbering so
// complexes of nested subposets are directly comparable.
SimplicialComplex order_complex(const Poset& p, const Bits& subset);

// Number of chains of each length in p, without materializing them.
std::vector<std::uint64_t> chain_counts(const Poset& p);

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);
SimplicialComplex suspension(const SimplicialComplex& x);
SimplicialComplex disjoint_union(std::span<const SimplicialComplex> xs);

// One-point union; each summand's lowest vertex becomes the basepoint.
// Throws EmptySummand.
SimplicialComplex wedge(std::span<const SimplicialComplex> xs);

// Convenience builders used by tests and reports.
SimplicialComplex points(std::size_t n);
SimplicialComplex sphere(int d);

// Sparse integer matrix, column major; entries within a column are sorted
// by row.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;

  std::int64_t at(std::size_t r, std::size_t c) const;
  std::size_t nonzeros() const;
};

// Chain complex C_0 <- C_1 <- ... with boundary(k): C_k -> C_{k-1}.
class ChainComplex {
public:
  ChainComplex() = default;
  ChainComplex(std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries,
               bool relative);

  int top_dimension() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int k) const;
  // Defined for 1 <= k <= top_dimension().
  const SparseMatrix& boundary(int k) const { return boundaries_[static_cast<std::size_t>(k) - 1]; }
  bool relative() const { return relative_; }

  // True iff boundary(k-1) * boundary(k) == 0 for all k.
  bool boundary_squares_to_zero() const;

private:
  std::vector<std::size_t> ranks_;
  std::vector<SparseMatrix> boundaries_;
  bool relative_ = false;
};

ChainComplex chain_complex(const SimplicialComplex& x);

// Chains of x modulo chains of a. Throws NotASubcomplex.
ChainComplex relative_chain_complex(const SimplicialComplex& x, const SimplicialComplex& a);

}  // namespace grouplat
