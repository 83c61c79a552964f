#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "grouplat/simplicial.hpp"

namespace grouplat {

using Integer = mpz_class;

// Nonzero invariant factors d1 | d2 | ... of an integer matrix, all positive.
struct SnfResult {
  std::vector<Integer> factors;

  std::size_t rank() const { return factors.size(); }
  // Factors greater than one.
  std::vector<Integer> torsion() const;
};

// Unit pivots are eliminated sparsely first; whatever is left is diagonalized
// densely. Arithmetic starts in checked 64-bit integers and restarts with
// arbitrary precision if any intermediate would overflow.
SnfResult smith_normal_form(const SparseMatrix& m);
SnfResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& dense);

SparseMatrix to_sparse(const std::vector<std::vector<std::int64_t>>& dense);

}  // namespace grouplat
