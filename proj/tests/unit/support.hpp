#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "grouplat/homology.hpp"
#include "grouplat/poset.hpp"
#include "grouplat/simplicial.hpp"

namespace testsupport {

using grouplat::Element;
using grouplat::HomologyProfile;
using grouplat::Poset;

inline std::vector<std::string> numbered(std::size_t n, const std::string& prefix = "x") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline Poset chain_poset(std::size_t n) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Poset::from_pairs(numbered(n), pairs);
}

inline Poset antichain_poset(std::size_t n) { return Poset::from_pairs(numbered(n), {}); }

// Nonempty proper subsets of {0..k-1} under inclusion, labelled by bitmask.
inline Poset boolean_proper_part(int k) {
  std::vector<unsigned> sets;
  for (unsigned s = 1; s + 1 < (1u << k); ++s) sets.push_back(s);
  std::vector<std::string> labels;
  for (unsigned s : sets) labels.push_back("s" + std::to_string(s));
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < sets.size(); ++a) {
    for (Element b = 0; b < sets.size(); ++b) {
      if (a != b && (sets[a] & sets[b]) == sets[a]) pairs.emplace_back(a, b);
    }
  }
  return Poset::from_pairs(labels, pairs);
}

// a minimal elements, each below all b maximal ones.
inline Poset complete_bipartite(std::size_t a, std::size_t b) {
  auto labels = numbered(a, "a");
  for (auto& l : numbered(b, "b")) labels.push_back(l);
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i < a; ++i) {
    for (Element j = 0; j < b; ++j) pairs.emplace_back(i, static_cast<Element>(a + j));
  }
  return Poset::from_pairs(labels, pairs);
}

// Random poset built from layers with random covering edges between
// consecutive and skipped layers.
inline Poset random_layered_poset(std::mt19937_64& rng, std::size_t max_size = 40) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
  std::uniform_int_distribution<int> layer_dist(1, 5);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::size_t n = size_dist(rng);
  const int layers = layer_dist(rng);
  const double density = 0.15 + 0.5 * coin(rng);
  std::vector<int> layer(n);
  std::uniform_int_distribution<int> pick(0, layers - 1);
  for (auto& l : layer) l = pick(rng);
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (layer[a] >= layer[b]) continue;
      const double p = layer[b] - layer[a] == 1 ? density : density / 4;
      if (coin(rng) < p) pairs.emplace_back(a, b);
    }
  }
  return Poset::from_pairs(numbered(n), pairs);
}

// Sparse random poset with a bounded number of chains, so that dense oracle
// matrices stay small.
inline Poset random_small_poset(std::mt19937_64& rng, std::size_t max_size = 14) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::size_t n = size_dist(rng);
  const double density = 0.1 + 0.35 * coin(rng);
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (coin(rng) < density) pairs.emplace_back(a, b);
    }
  }
  return Poset::from_pairs(numbered(n), pairs);
}

// All nonempty chains, each listed bottom to top, enumerated straight from
// the order relation.
inline std::vector<std::vector<Element>> all_chains(const Poset& p) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> cur;
  auto extend = [&](auto&& self) -> void {
    for (Element x = 0; x < p.size(); ++x) {
      if (!cur.empty() && !p.less(cur.back(), x)) continue;
      cur.push_back(x);
      out.push_back(cur);
      self(self);
      cur.pop_back();
    }
  };
  extend(extend);
  return out;
}

inline std::vector<std::uint64_t> chain_counts_by_brute_force(const Poset& p) {
  std::vector<std::uint64_t> counts;
  for (const auto& c : all_chains(p)) {
    if (counts.size() < c.size()) counts.resize(c.size());
    ++counts[c.size() - 1];
  }
  return counts;
}

// Dense matrix rank over Q (p == 0) or F_p.
inline std::size_t dense_rank(std::vector<std::vector<long>> rows, long p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  if (p == 0) {
    std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = rows[i][j];
    }
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
      std::size_t piv = rank;
      while (piv < m.size() && m[piv][c] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[piv], m[rank]);
      for (std::size_t i = rank + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        const mpq_class f = m[i][c] / m[rank][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
      }
      ++rank;
    }
    return rank;
  }
  auto inv = [p](long a) {
    long r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& r : rows) {
    for (auto& v : r) v = ((v % p) + p) % p;
  }
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const long iv = inv(rows[rank][c]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const long f = rows[i][c] * iv % p;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Faces by dimension; each face a sorted vertex list.
using FaceLists = std::vector<std::vector<std::vector<std::uint32_t>>>;

inline FaceLists faces_of_poset(const Poset& p) {
  FaceLists f;
  for (auto c : all_chains(p)) {
    std::sort(c.begin(), c.end());
    if (f.size() < c.size()) f.resize(c.size());
    f[c.size() - 1].push_back(std::vector<std::uint32_t>(c.begin(), c.end()));
  }
  for (auto& d : f) std::sort(d.begin(), d.end());
  return f;
}

inline FaceLists faces_of_complex(const grouplat::SimplicialComplex& x) {
  FaceLists f(static_cast<std::size_t>(x.dimension() + 1));
  for (int d = 0; d <= x.dimension(); ++d) {
    for (std::size_t i = 0; i < x.count(d); ++i) {
      auto s = x.simplex(d, i);
      f[static_cast<std::size_t>(d)].emplace_back(s.begin(), s.end());
    }
  }
  return f;
}

// Reduced Betti numbers over Q (p == 0) or F_p, indexed from dimension -1.
inline std::vector<long> reduced_betti(const FaceLists& f, long p) {
  const int top = static_cast<int>(f.size()) - 1;
  // dims[k+1] = rank of C_k for k = -1..top.
  std::vector<long> dims{1};
  for (const auto& d : f) dims.push_back(static_cast<long>(d.size()));
  // ranks[k+1] = rank of d_k : C_k -> C_{k-1}, for k = 0..top.
  std::vector<long> ranks(dims.size() + 1, 0);
  for (int k = 0; k <= top; ++k) {
    const auto& cur = f[static_cast<std::size_t>(k)];
    std::vector<std::vector<long>> m;
    if (k == 0) {
      m.assign(1, std::vector<long>(cur.size(), 1));
    } else {
      const auto& prev = f[static_cast<std::size_t>(k - 1)];
      std::map<std::vector<std::uint32_t>, std::size_t> index;
      for (std::size_t i = 0; i < prev.size(); ++i) index[prev[i]] = i;
      m.assign(prev.size(), std::vector<long>(cur.size(), 0));
      for (std::size_t j = 0; j < cur.size(); ++j) {
        for (std::size_t drop = 0; drop < cur[j].size(); ++drop) {
          auto face = cur[j];
          face.erase(face.begin() + static_cast<long>(drop));
          m[index.at(face)][j] = drop % 2 == 0 ? 1 : -1;
        }
      }
    }
    ranks[static_cast<std::size_t>(k + 1)] = static_cast<long>(dense_rank(std::move(m), p));
  }
  std::vector<long> betti;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const long in = i + 1 < ranks.size() ? ranks[i + 1] : 0;
    betti.push_back(dims[i] - ranks[i] - in);
  }
  return betti;
}

inline std::size_t total_faces(const FaceLists& f) {
  std::size_t n = 0;
  for (const auto& d : f) n += d.size();
  return n;
}

// Number of invariant factors of `g` divisible by p.
inline long torsion_count(const grouplat::AbelianGroup& g, long p) {
  return static_cast<long>(std::count_if(g.torsion.begin(), g.torsion.end(), [p](auto t) { return t % p == 0; }));
}

// Checks a reduced homology profile against rational and mod-p Betti
// numbers via universal coefficients:
// dim H~_k(X; F_p) = b_k + t_k(p) + t_{k-1}(p).
inline bool agrees_with_oracle(const HomologyProfile& h, const FaceLists& f, std::string* why = nullptr) {
  const auto q = reduced_betti(f, 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const int k = static_cast<int>(i) - 1;
    if (static_cast<long>(h.rank(k)) != q[i]) {
      if (why) *why = "rational rank mismatch at " + std::to_string(k);
      return false;
    }
  }
  for (int m : h.support()) {
    if (m < -1 || m + 1 >= static_cast<int>(q.size())) {
      if (why) *why = "homology outside the complex's range";
      return false;
    }
  }
  for (long p : {2L, 3L, 5L}) {
    const auto b = reduced_betti(f, p);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const int k = static_cast<int>(i) - 1;
      const long expect = static_cast<long>(h.rank(k)) + torsion_count(h.at(k), p) + torsion_count(h.at(k - 1), p);
      if (b[i] != expect) {
        if (why) *why = "mod " + std::to_string(p) + " mismatch at " + std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

}  // namespace testsupport
