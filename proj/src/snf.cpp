#include "grouplat/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace grouplat {
namespace {

struct Overflow {};

// Checked 64-bit arithmetic; mpz_class arithmetic never overflows.
inline std::int64_t sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
  return out;
}
inline Integer sub_mul(const Integer& a, const Integer& f, const Integer& b) { return a - f * b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const Integer& v) { return v == 1 || v == -1; }

inline std::int64_t magnitude(std::int64_t v) {
  if (v == INT64_MIN) throw Overflow{};
  return v < 0 ? -v : v;
}
inline Integer magnitude(const Integer& v) { return abs(v); }

inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(const Integer& v) { return sgn(v) == 0; }

inline std::int64_t quotient(std::int64_t a, std::int64_t b) { return a / b; }
inline Integer quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }
inline Integer to_integer(const Integer& v) { return v; }

template <typename T>
using Column = std::vector<std::pair<std::uint32_t, T>>;

// Diagonalizes a dense matrix in place and returns |diagonal| entries.
template <typename T>
std::vector<Integer> dense_diagonal(std::vector<std::vector<T>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Integer> diag;
  std::size_t r = 0;
  while (r < rows && r < cols) {
    // Smallest nonzero magnitude in the trailing block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    T best{};
    for (std::size_t i = r; i < rows; ++i) {
      for (std::size_t j = r; j < cols; ++j) {
        if (is_zero(a[i][j])) continue;
        T m = magnitude(a[i][j]);
        if (pi == rows || m < best) {
          best = m;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    std::swap(a[r], a[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][r], a[i][pj]);

    for (;;) {
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (is_zero(a[i][r])) continue;
        const T q = quotient(a[i][r], a[r][r]);
        for (std::size_t j = r; j < cols; ++j) a[i][j] = sub_mul(a[i][j], q, a[r][j]);
        if (!is_zero(a[i][r])) clean = false;
      }
      for (std::size_t j = r + 1; j < cols; ++j) {
        if (is_zero(a[r][j])) continue;
        const T q = quotient(a[r][j], a[r][r]);
        for (std::size_t i = r; i < rows; ++i) a[i][j] = sub_mul(a[i][j], q, a[i][r]);
        if (!is_zero(a[r][j])) clean = false;
      }
      if (clean) break;
      // A remainder survived: move the smallest one in row/column r to the pivot.
      T m = magnitude(a[r][r]);
      std::size_t si = r, sj = r;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (!is_zero(a[i][r]) && magnitude(a[i][r]) < m) {
          m = magnitude(a[i][r]);
          si = i;
          sj = r;
        }
      }
      for (std::size_t j = r + 1; j < cols; ++j) {
        if (!is_zero(a[r][j]) && magnitude(a[r][j]) < m) {
          m = magnitude(a[r][j]);
          si = r;
          sj = j;
        }
      }
      if (si != r) std::swap(a[r], a[si]);
      if (sj != r) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][r], a[i][sj]);
      }
    }
    diag.push_back(abs(to_integer(a[r][r])));
    ++r;
  }
  return diag;
}

std::vector<Integer> invariant_factors(std::vector<Integer> diag) {
  std::vector<Integer> big;
  std::size_t ones = 0;
  for (auto& d : diag) {
    if (d == 1) {
      ++ones;
    } else {
      big.push_back(std::move(d));
    }
  }
  // diag(a, b) is equivalent to diag(gcd, lcm).
  for (std::size_t i = 0; i < big.size(); ++i) {
    for (std::size_t j = i + 1; j < big.size(); ++j) {
      Integer g = gcd(big[i], big[j]);
      if (g == big[i]) continue;
      Integer l = (big[i] / g) * big[j];
      big[i] = g;
      big[j] = l;
    }
  }
  std::sort(big.begin(), big.end());
  std::vector<Integer> out(ones, Integer(1));
  std::size_t extra_ones = 0;
  for (auto& b : big) {
    if (b == 1) {
      ++extra_ones;
    } else {
      out.push_back(std::move(b));
    }
  }
  out.insert(out.begin(), extra_ones, Integer(1));
  return out;
}

template <typename T>
std::vector<Integer> sparse_diagonal(const SparseMatrix& m) {
  const std::size_t nrows = m.rows;
  const std::size_t ncols = m.cols;
  std::vector<Column<T>> cols(ncols);
  std::vector<std::vector<std::uint32_t>> row_cols(nrows);
  std::vector<std::size_t> row_count(nrows, 0);
  for (std::size_t c = 0; c < ncols; ++c) {
    for (auto [r, v] : m.columns[c]) {
      if (v == 0) continue;
      cols[c].emplace_back(r, T(v));
      row_cols[r].push_back(static_cast<std::uint32_t>(c));
      ++row_count[r];
    }
  }
  std::vector<char> col_alive(ncols, 1);
  std::vector<char> row_alive(nrows, 1);
  std::vector<std::uint32_t> stamp(ncols, 0);
  std::uint32_t epoch = 0;
  std::size_t units = 0;

  auto find_entry = [](const Column<T>& col, std::uint32_t r) -> const T* {
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, std::uint32_t row) { return e.first < row; });
    return (it != col.end() && it->first == r) ? &it->second : nullptr;
  };

  Column<T> merged;
  auto pivot = [&](std::uint32_t pr, std::uint32_t pc, const T& unit) {
    const Column<T>& pcol = cols[pc];
    ++epoch;
    stamp[pc] = epoch;
    for (std::uint32_t c : row_cols[pr]) {
      if (stamp[c] == epoch || !col_alive[c]) continue;
      stamp[c] = epoch;
      const T* hit = find_entry(cols[c], pr);
      if (!hit) continue;
      const T f = (*hit) * unit;  // unit is +-1, so this is hit / unit
      // cols[c] -= f * pcol
      merged.clear();
      auto& target = cols[c];
      std::size_t i = 0, j = 0;
      while (i < target.size() || j < pcol.size()) {
        if (j == pcol.size() || (i < target.size() && target[i].first < pcol[j].first)) {
          merged.push_back(target[i++]);
        } else if (i == target.size() || pcol[j].first < target[i].first) {
          const std::uint32_t r = pcol[j].first;
          T v = sub_mul(T(0), f, pcol[j].second);
          merged.emplace_back(r, v);
          row_cols[r].push_back(c);
          ++row_count[r];
          ++j;
        } else {
          const std::uint32_t r = target[i].first;
          T v = sub_mul(target[i].second, f, pcol[j].second);
          if (is_zero(v)) {
            --row_count[r];
          } else {
            merged.emplace_back(r, std::move(v));
          }
          ++i;
          ++j;
        }
      }
      target.swap(merged);
    }
    for (const auto& [r, v] : pcol) --row_count[r];
    row_alive[pr] = 0;
    col_alive[pc] = 0;
    cols[pc].clear();
    cols[pc].shrink_to_fit();
    row_cols[pr].clear();
    row_cols[pr].shrink_to_fit();
    ++units;
  };

  std::vector<std::uint32_t> order;
  for (;;) {
    order.clear();
    for (std::size_t c = 0; c < ncols; ++c) {
      if (col_alive[c] && !cols[c].empty()) order.push_back(static_cast<std::uint32_t>(c));
    }
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return cols[a].size() < cols[b].size();
    });
    std::size_t pivots = 0;
    for (std::uint32_t c : order) {
      if (!col_alive[c] || cols[c].empty()) continue;
      std::uint32_t best_row = 0;
      std::size_t best_count = 0;
      const T* best_val = nullptr;
      for (const auto& [r, v] : cols[c]) {
        if (!is_unit(v) || !row_alive[r]) continue;
        if (!best_val || row_count[r] < best_count) {
          best_row = r;
          best_count = row_count[r];
          best_val = &v;
        }
      }
      if (!best_val) continue;
      const T unit = *best_val;
      pivot(best_row, c, unit);
      ++pivots;
    }
    if (pivots == 0) break;
  }

  // Dense residual over the surviving rows and columns.
  std::vector<std::uint32_t> live_cols;
  std::vector<std::int64_t> row_pos(nrows, -1);
  std::size_t live_rows = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (!col_alive[c] || cols[c].empty()) continue;
    live_cols.push_back(static_cast<std::uint32_t>(c));
    for (const auto& [r, v] : cols[c]) {
      if (row_pos[r] < 0) row_pos[r] = static_cast<std::int64_t>(live_rows++);
    }
  }
  std::vector<Integer> diag(units, Integer(1));
  if (!live_cols.empty()) {
    std::vector<std::vector<T>> dense(live_rows, std::vector<T>(live_cols.size(), T(0)));
    for (std::size_t j = 0; j < live_cols.size(); ++j) {
      for (const auto& [r, v] : cols[live_cols[j]]) dense[static_cast<std::size_t>(row_pos[r])][j] = v;
    }
    auto rest = dense_diagonal(std::move(dense));
    diag.insert(diag.end(), rest.begin(), rest.end());
  }
  return diag;
}

}  // namespace

std::vector<Integer> SnfResult::torsion() const {
  std::vector<Integer> out;
  for (const auto& f : factors) {
    if (f > 1) out.push_back(f);
  }
  return out;
}

SnfResult smith_normal_form(const SparseMatrix& m) {
  SnfResult result;
  try {
    result.factors = invariant_factors(sparse_diagonal<std::int64_t>(m));
  } catch (const Overflow&) {
    result.factors = invariant_factors(sparse_diagonal<Integer>(m));
  }
  return result;
}

SparseMatrix to_sparse(const std::vector<std::vector<std::int64_t>>& dense) {
  SparseMatrix m;
  m.rows = dense.size();
  m.cols = dense.empty() ? 0 : dense[0].size();
  m.columns.resize(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (dense[r][c] != 0) m.columns[c].emplace_back(static_cast<std::uint32_t>(r), dense[r][c]);
    }
  }
  return m;
}

SnfResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& dense) {
  return smith_normal_form(to_sparse(dense));
}

}  // namespace grouplat
