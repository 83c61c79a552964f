#include "grouplat/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "grouplat/errors.hpp"

namespace grouplat {
namespace {

// Sorts and deduplicates a flat array of width-w tuples.
void normalize_flat(std::vector<Vertex>& flat, std::size_t w) {
  const std::size_t n = flat.size() / w;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto row = [&](std::size_t i) { return flat.begin() + static_cast<std::ptrdiff_t>(i * w); };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(w), row(b),
                                        row(b) + static_cast<std::ptrdiff_t>(w));
  });
  std::vector<Vertex> out;
  out.reserve(flat.size());
  for (std::size_t k = 0; k < n; ++k) {
    auto r = row(idx[k]);
    if (!out.empty() && std::equal(r, r + static_cast<std::ptrdiff_t>(w),
                                   out.end() - static_cast<std::ptrdiff_t>(w))) {
      continue;
    }
    out.insert(out.end(), r, r + static_cast<std::ptrdiff_t>(w));
  }
  flat = std::move(out);
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

// Appends all nonempty faces of `s` (sorted) into per-dimension arrays.
void add_faces(std::span<const Vertex> s, std::vector<std::vector<Vertex>>& faces) {
  const std::size_t k = s.size();
  if (faces.size() < k) faces.resize(k);
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    const auto w = static_cast<std::size_t>(std::popcount(mask));
    auto& flat = faces[w - 1];
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) flat.push_back(s[i]);
    }
  }
}

SimplicialComplex finalize(std::vector<std::string> labels,
                           std::vector<std::vector<Vertex>> faces) {
  while (!faces.empty() && faces.back().empty()) faces.pop_back();
  for (std::size_t d = 0; d < faces.size(); ++d) normalize_flat(faces[d], d + 1);
  return SimplicialComplex::from_sorted_faces(std::move(labels), std::move(faces));
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count,
                                                    std::vector<std::vector<Vertex>> simplices,
                                                    std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(vertex_count);
  std::vector<std::vector<Vertex>> faces;
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    if (s.back() >= vertex_count) throw InputError("simplex vertex out of range");
    if (s.size() > 20) throw InputError("simplex too large to close under faces");
    add_faces(s, faces);
  }
  return finalize(std::move(labels), std::move(faces));
}

SimplicialComplex SimplicialComplex::from_sorted_faces(std::vector<std::string> labels,
                                                       std::vector<std::vector<Vertex>> faces) {
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  c.faces_ = std::move(faces);
  while (!c.faces_.empty() && c.faces_.back().empty()) c.faces_.pop_back();
  return c;
}

std::size_t SimplicialComplex::count(int d) const {
  if (d < 0 || d > dimension()) return 0;
  return faces_[static_cast<std::size_t>(d)].size() / (static_cast<std::size_t>(d) + 1);
}

std::optional<std::size_t> SimplicialComplex::index_of(std::span<const Vertex> s) const {
  if (s.empty()) return std::nullopt;
  const int d = static_cast<int>(s.size()) - 1;
  if (d > dimension()) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = count(d);
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto t = simplex(d, mid);
    if (std::lexicographical_compare(t.begin(), t.end(), s.begin(), s.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < count(d)) {
    auto t = simplex(d, lo);
    if (std::equal(t.begin(), t.end(), s.begin(), s.end())) return lo;
  }
  return std::nullopt;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int d = 0; d <= dimension(); ++d) f.push_back(count(d));
  return f;
}

std::vector<std::vector<Vertex>> SimplicialComplex::maximal_simplices() const {
  std::vector<std::vector<Vertex>> out;
  for (int d = dimension(); d >= 0; --d) {
    for (std::size_t i = 0; i < count(d); ++i) {
      auto s = simplex(d, i);
      bool maximal = true;
      // A face is maximal iff no cofacet exists; test one extra vertex at a time.
      if (d < dimension()) {
        for (std::size_t v = 0; v < vertex_count() && maximal; ++v) {
          if (std::binary_search(s.begin(), s.end(), static_cast<Vertex>(v))) continue;
          std::vector<Vertex> u(s.begin(), s.end());
          u.insert(std::upper_bound(u.begin(), u.end(), static_cast<Vertex>(v)),
                   static_cast<Vertex>(v));
          if (contains(u)) maximal = false;
        }
      }
      if (maximal) out.emplace_back(s.begin(), s.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string SimplicialComplex::dump() const {
  std::ostringstream os;
  for (const auto& s : maximal_simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) os << ' ';
      os << s[i];
    }
    os << '\n';
  }
  return os.str();
}

SimplicialComplex order_complex(const Poset& p, const Bits& subset) {
  const std::size_t n = p.size();
  // comparable_after[v]: elements of the subset comparable to v with larger index.
  std::vector<Bits> comparable_after(n);
  Bits after = subset;
  for (auto v = subset.find_first(); v != Bits::npos; v = subset.find_next(v)) {
    after.reset(v);
    comparable_after[v] = (p.above(static_cast<Element>(v)) | p.below(static_cast<Element>(v))) & after;
  }

  std::vector<std::vector<Vertex>> faces;
  std::vector<Vertex> prefix;
  // Depth-first over increasing vertex tuples emits each dimension in
  // lexicographic order, so no sort is needed afterwards.
  auto visit = [&](auto&& self, const Bits& candidates) -> void {
    const std::size_t w = prefix.size();
    if (faces.size() < w) faces.resize(w);
    faces[w - 1].insert(faces[w - 1].end(), prefix.begin(), prefix.end());
    for (auto u = candidates.find_first(); u != Bits::npos; u = candidates.find_next(u)) {
      prefix.push_back(static_cast<Vertex>(u));
      self(self, candidates & comparable_after[u]);
      prefix.pop_back();
    }
  };
  for (auto v = subset.find_first(); v != Bits::npos; v = subset.find_next(v)) {
    prefix.assign(1, static_cast<Vertex>(v));
    visit(visit, comparable_after[v]);
  }
  return SimplicialComplex::from_sorted_faces(p.labels(), std::move(faces));
}

SimplicialComplex order_complex(const Poset& p) { return order_complex(p, p.all()); }

std::vector<std::uint64_t> chain_counts(const Poset& p) {
  const std::size_t n = p.size();
  // ending[h][k]: chains of k+1 elements whose maximum is h.
  std::vector<std::vector<std::uint64_t>> ending(n);
  std::vector<std::uint64_t> total;
  for (Element h : p.linear_extension()) {
    auto& row = ending[h];
    row.assign(1, 1);
    const Bits& down = p.below(h);
    for (auto x = down.find_first(); x != Bits::npos; x = down.find_next(x)) {
      const auto& r = ending[x];
      if (row.size() < r.size() + 1) row.resize(r.size() + 1, 0);
      for (std::size_t k = 0; k < r.size(); ++k) row[k + 1] += r[k];
    }
    if (total.size() < row.size()) total.resize(row.size(), 0);
    for (std::size_t k = 0; k < row.size(); ++k) total[k] += row[k];
  }
  return total;
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
  const auto offset = static_cast<Vertex>(x.vertex_count());
  std::vector<std::string> labels = x.labels();
  for (const auto& l : y.labels()) labels.push_back(l);

  const int dx = x.dimension();
  const int dy = y.dimension();
  const int dim = dx + dy + 1;
  std::vector<std::vector<Vertex>> faces(static_cast<std::size_t>(std::max(dim + 1, 0)));
  // The empty simplex on either side is represented by d == -1.
  for (int a = -1; a <= dx; ++a) {
    const std::size_t na = a < 0 ? 1 : x.count(a);
    for (int b = -1; b <= dy; ++b) {
      if (a < 0 && b < 0) continue;
      const std::size_t nb = b < 0 ? 1 : y.count(b);
      auto& flat = faces[static_cast<std::size_t>(a + b + 1)];
      for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
          if (a >= 0) {
            auto s = x.simplex(a, i);
            flat.insert(flat.end(), s.begin(), s.end());
          }
          if (b >= 0) {
            for (Vertex v : y.simplex(b, j)) flat.push_back(v + offset);
          }
        }
      }
    }
  }
  return finalize(std::move(labels), std::move(faces));
}

SimplicialComplex points(std::size_t n) {
  std::vector<std::vector<Vertex>> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back({static_cast<Vertex>(i)});
  return SimplicialComplex::from_simplices(n, std::move(s));
}

SimplicialComplex sphere(int d) {
  if (d < 0) return {};
  const auto n = static_cast<std::size_t>(d) + 2;
  std::vector<std::vector<Vertex>> s;
  for (std::size_t skip = 0; skip < n; ++skip) {
    std::vector<Vertex> facet;
    for (std::size_t v = 0; v < n; ++v) {
      if (v != skip) facet.push_back(static_cast<Vertex>(v));
    }
    s.push_back(std::move(facet));
  }
  return SimplicialComplex::from_simplices(n, std::move(s));
}

SimplicialComplex suspension(const SimplicialComplex& x) {
  auto poles = SimplicialComplex::from_simplices(2, {{0}, {1}}, {"south", "north"});
  return join(x, poles);
}

namespace {

// Relabels the summands into one vertex space. When `glue` is set, each
// summand's lowest used vertex maps to global vertex 0.
SimplicialComplex combine(std::span<const SimplicialComplex> xs, bool glue) {
  std::vector<std::string> labels;
  std::vector<std::vector<Vertex>> faces;
  if (glue) labels.emplace_back("*");
  for (const auto& x : xs) {
    std::vector<Vertex> map(x.vertex_count(), 0);
    std::optional<Vertex> base;
    if (glue && !x.empty()) base = x.simplex(0, 0)[0];
    for (std::size_t v = 0; v < x.vertex_count(); ++v) {
      if (base && v == *base) continue;
      map[v] = static_cast<Vertex>(labels.size());
      labels.push_back(x.labels()[v]);
    }
    if (faces.size() < static_cast<std::size_t>(x.dimension() + 1)) {
      faces.resize(static_cast<std::size_t>(x.dimension() + 1));
    }
    for (int d = 0; d <= x.dimension(); ++d) {
      auto& flat = faces[static_cast<std::size_t>(d)];
      for (std::size_t i = 0; i < x.count(d); ++i) {
        std::vector<Vertex> s;
        for (Vertex v : x.simplex(d, i)) s.push_back(map[v]);
        std::sort(s.begin(), s.end());
        flat.insert(flat.end(), s.begin(), s.end());
      }
    }
  }
  return finalize(std::move(labels), std::move(faces));
}

}  // namespace

SimplicialComplex disjoint_union(std::span<const SimplicialComplex> xs) {
  return combine(xs, false);
}

SimplicialComplex wedge(std::span<const SimplicialComplex> xs) {
  for (const auto& x : xs) {
    if (x.empty()) throw EmptySummand("wedge summand is empty");
  }
  if (xs.empty()) return points(1);
  return combine(xs, true);
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, std::size_t row) { return e.first < row; });
  return (it != col.end() && it->first == r) ? it->second : 0;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries,
                           bool relative)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)), relative_(relative) {
  if (!ranks_.empty() && boundaries_.size() + 1 != ranks_.size()) {
    throw InvalidComplex("boundary count does not match chain ranks");
  }
}

std::size_t ChainComplex::rank(int k) const {
  if (k < 0 || k > top_dimension()) return 0;
  return ranks_[static_cast<std::size_t>(k)];
}

bool ChainComplex::boundary_squares_to_zero() const {
  for (int k = 2; k <= top_dimension(); ++k) {
    const auto& outer = boundary(k - 1);
    const auto& inner = boundary(k);
    std::vector<std::int64_t> acc(outer.rows, 0);
    for (const auto& col : inner.columns) {
      std::fill(acc.begin(), acc.end(), 0);
      for (auto [mid, v] : col) {
        for (auto [row, w] : outer.columns[mid]) acc[row] += v * w;
      }
      for (auto a : acc) {
        if (a != 0) return false;
      }
    }
  }
  return true;
}

namespace {

ChainComplex build_chain_complex(const SimplicialComplex& x, const SimplicialComplex* sub) {
  const int top = x.dimension();
  // index[d][i]: position of simplex i among surviving d-simplices, or -1.
  std::vector<std::vector<std::int64_t>> index(static_cast<std::size_t>(std::max(top + 1, 0)));
  std::vector<std::size_t> ranks;
  for (int d = 0; d <= top; ++d) {
    auto& idx = index[static_cast<std::size_t>(d)];
    idx.assign(x.count(d), -1);
    std::int64_t next = 0;
    for (std::size_t i = 0; i < x.count(d); ++i) {
      if (sub && sub->contains(x.simplex(d, i))) continue;
      idx[i] = next++;
    }
    ranks.push_back(static_cast<std::size_t>(next));
  }
  while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();

  std::vector<SparseMatrix> boundaries;
  std::vector<Vertex> face;
  for (int d = 1; d < static_cast<int>(ranks.size()); ++d) {
    SparseMatrix m;
    m.rows = ranks[static_cast<std::size_t>(d) - 1];
    m.cols = ranks[static_cast<std::size_t>(d)];
    m.columns.resize(m.cols);
    const auto& idx = index[static_cast<std::size_t>(d)];
    const auto& lower = index[static_cast<std::size_t>(d) - 1];
    for (std::size_t i = 0; i < x.count(d); ++i) {
      if (idx[i] < 0) continue;
      auto s = x.simplex(d, i);
      auto& col = m.columns[static_cast<std::size_t>(idx[i])];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (j != drop) face.push_back(s[j]);
        }
        const auto pos = x.index_of(face);
        const std::int64_t row = lower[*pos];
        if (row < 0) continue;
        col.emplace_back(static_cast<std::uint32_t>(row), (drop % 2 == 0) ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
    }
    boundaries.push_back(std::move(m));
  }
  return ChainComplex(std::move(ranks), std::move(boundaries), sub != nullptr);
}

}  // namespace

ChainComplex chain_complex(const SimplicialComplex& x) { return build_chain_complex(x, nullptr); }

ChainComplex relative_chain_complex(const SimplicialComplex& x, const SimplicialComplex& a) {
  for (int d = 0; d <= a.dimension(); ++d) {
    for (std::size_t i = 0; i < a.count(d); ++i) {
      if (!x.contains(a.simplex(d, i))) throw NotASubcomplex("simplex of A missing from X");
    }
  }
  return build_chain_complex(x, &a);
}

}  // namespace grouplat
