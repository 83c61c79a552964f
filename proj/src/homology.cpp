#include "grouplat/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "grouplat/errors.hpp"
#include "grouplat/snf.hpp"

namespace grouplat {
namespace {

std::vector<std::int64_t> normalize_torsion(std::vector<std::int64_t> t) {
  std::erase_if(t, [](std::int64_t v) { return v == 1; });
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const std::int64_t g = std::gcd(t[i], t[j]);
      if (g == t[i]) continue;
      std::int64_t l = 0;
      if (__builtin_mul_overflow(t[i] / g, t[j], &l)) throw Error("torsion coefficient overflow");
      t[i] = g;
      t[j] = l;
    }
  }
  std::erase_if(t, [](std::int64_t v) { return v == 1; });
  std::sort(t.begin(), t.end());
  return t;
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw Error("torsion coefficient does not fit in 64 bits");
  return v.get_si();
}

}  // namespace

AbelianGroup& AbelianGroup::operator+=(const AbelianGroup& other) {
  rank += other.rank;
  if (!other.torsion.empty()) {
    torsion.insert(torsion.end(), other.torsion.begin(), other.torsion.end());
    torsion = normalize_torsion(std::move(torsion));
  }
  return *this;
}

AbelianGroup AbelianGroup::repeated(std::uint64_t n) const {
  AbelianGroup g;
  g.rank = rank * n;
  for (std::uint64_t i = 0; i < n; ++i) g.torsion.insert(g.torsion.end(), torsion.begin(), torsion.end());
  g.torsion = normalize_torsion(std::move(g.torsion));
  return g;
}

std::string AbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << '^' << rank;
    first = false;
  }
  for (auto t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
  AbelianGroup g;
  std::istringstream is(text);
  std::string term;
  while (is >> term) {
    if (term == "+" || term == "0") continue;
    if (term.rfind("Z/", 0) == 0) {
      g.torsion.push_back(std::stoll(term.substr(2)));
    } else if (term == "Z") {
      g.rank += 1;
    } else if (term.rfind("Z^", 0) == 0) {
      g.rank += std::stoull(term.substr(2));
    } else {
      throw ParseError("cannot parse group term '" + term + "'");
    }
  }
  g.torsion = normalize_torsion(std::move(g.torsion));
  return g;
}

const AbelianGroup& HomologyProfile::at(int m) const {
  static const AbelianGroup zero;
  auto it = groups_.find(m);
  return it == groups_.end() ? zero : it->second;
}

void HomologyProfile::set(int m, AbelianGroup g) { groups_[m] = std::move(g); }

std::vector<int> HomologyProfile::support() const {
  std::vector<int> out;
  for (const auto& [m, g] : groups_) {
    if (!g.is_zero()) out.push_back(m);
  }
  return out;
}

bool HomologyProfile::torsion_free() const {
  return std::all_of(groups_.begin(), groups_.end(),
                     [](const auto& kv) { return kv.second.torsion_free(); });
}

std::int64_t HomologyProfile::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& [m, g] : groups_) {
    const auto r = static_cast<std::int64_t>(g.rank);
    chi += (m % 2 == 0) ? r : -r;
  }
  return chi;
}

HomologyProfile& HomologyProfile::operator+=(const HomologyProfile& other) {
  for (const auto& [m, g] : other.groups_) groups_[m] += g;
  return *this;
}

HomologyProfile HomologyProfile::shifted(int k) const {
  HomologyProfile out(reduced_);
  for (const auto& [m, g] : groups_) out.groups_[m + k] = g;
  return out;
}

bool HomologyProfile::same_groups(const HomologyProfile& other) const {
  if (support() != other.support()) return false;
  for (int m : support()) {
    if (!(at(m) == other.at(m))) return false;
  }
  return true;
}

std::string HomologyProfile::to_string() const {
  std::ostringstream os;
  const char* name = reduced_ ? "H~" : "H";
  for (const auto& [m, g] : groups_) os << name << '[' << m << "] = " << g.to_string() << '\n';
  return os.str();
}

HomologyProfile homology(const ChainComplex& c, bool reduced) {
  if (!c.boundary_squares_to_zero()) throw InvalidComplex("boundary maps do not compose to zero");
  const bool augment = reduced && !c.relative();
  const int top = c.top_dimension();

  HomologyProfile h(reduced);
  if (top < 0) {
    if (augment) h.set(-1, AbelianGroup::free(1));
    return h;
  }

  // snf[k] describes the boundary out of dimension k (k = 0 is the augmentation).
  std::vector<SnfResult> snf(static_cast<std::size_t>(top) + 2);
  if (augment) {
    SparseMatrix aug;
    aug.rows = 1;
    aug.cols = c.rank(0);
    aug.columns.assign(aug.cols, {{0u, 1}});
    if (top >= 1) {
      for (const auto& col : c.boundary(1).columns) {
        std::int64_t sum = 0;
        for (const auto& e : col) sum += e.second;
        if (sum != 0) throw InvalidComplex("augmentation does not vanish on boundaries");
      }
    }
    snf[0] = smith_normal_form(aug);
  }
  for (int k = 1; k <= top; ++k) snf[static_cast<std::size_t>(k)] = smith_normal_form(c.boundary(k));

  if (augment) {
    // H~_{-1} = Z / im(augmentation), zero for a nonempty complex.
    AbelianGroup g;
    g.rank = 1 - snf[0].rank();
    h.set(-1, g);
  }
  for (int k = 0; k <= top; ++k) {
    AbelianGroup g;
    const std::size_t out_rank = snf[static_cast<std::size_t>(k)].rank();
    const std::size_t in_rank = snf[static_cast<std::size_t>(k) + 1].rank();
    g.rank = c.rank(k) - out_rank - in_rank;
    for (const auto& t : snf[static_cast<std::size_t>(k) + 1].torsion()) g.torsion.push_back(to_int64(t));
    h.set(k, g);
  }
  return h;
}

HomologyProfile relative_homology(const ChainComplex& pair) { return homology(pair, false); }

HomologyProfile reduced_homology(const SimplicialComplex& x) { return homology(chain_complex(x), true); }

HomologyProfile reduced_homology(const Poset& p) { return reduced_homology(order_complex(p)); }

std::int64_t reduced_euler(const SimplicialComplex& x) {
  std::int64_t chi = -1;
  for (int d = 0; d <= x.dimension(); ++d) {
    const auto f = static_cast<std::int64_t>(x.count(d));
    chi += (d % 2 == 0) ? f : -f;
  }
  return chi;
}

std::int64_t reduced_euler(const Poset& p) {
  std::int64_t chi = -1;
  const auto counts = chain_counts(p);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const auto f = static_cast<std::int64_t>(counts[k]);
    chi += (k % 2 == 0) ? f : -f;
  }
  return chi;
}

std::int64_t mobius_bottom_top(const BoundedLattice& l) {
  const Poset& p = l.poset();
  std::vector<std::int64_t> mu(p.size(), 0);
  Bits interval = p.above(l.bottom());
  interval.set(l.bottom());
  for (Element x : p.linear_extension()) {
    if (!interval.test(x)) continue;
    if (x == l.bottom()) {
      mu[x] = 1;
      continue;
    }
    std::int64_t sum = 0;
    const Bits lower = p.below(x) & interval;
    for (auto y = lower.find_first(); y != Bits::npos; y = lower.find_next(y)) sum += mu[y];
    mu[x] = -sum;
  }
  return mu[l.top()];
}

int hdim(const HomologyProfile& h) {
  const auto s = h.support();
  if (s.empty()) return -1;
  return std::max(-1, s.back());
}

}  // namespace grouplat
