#include "grouplat/spectral.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "grouplat/errors.hpp"
#include "grouplat/parallel.hpp"

namespace grouplat {

std::vector<HomologyProfile> fiber_homologies(const Poset& p, const std::vector<std::uint64_t>* keys,
                                              std::size_t jobs) {
  const std::size_t n = p.size();
  if (keys && keys->size() != n) throw InputError("fiber key vector has wrong length");
  std::vector<Element> todo;
  std::vector<Element> source(n);
  std::unordered_map<std::uint64_t, Element> first;
  for (Element h = 0; h < n; ++h) {
    if (keys) {
      auto [it, fresh] = first.emplace((*keys)[h], h);
      source[h] = it->second;
      if (!fresh) continue;
    } else {
      source[h] = h;
    }
    todo.push_back(h);
  }
  std::vector<HomologyProfile> computed(n);
  parallel_for(todo.size(), jobs, [&](std::size_t i) {
    const Element h = todo[i];
    computed[h] = homology(chain_complex(order_complex(p, p.below(h))), true);
  });
  std::vector<HomologyProfile> out(n);
  for (Element h = 0; h < n; ++h) out[h] = computed[source[h]];
  return out;
}

const AbelianGroup& E1Page::at(int k, int l) const {
  static const AbelianGroup zero;
  auto it = cells.find({k, l});
  return it == cells.end() ? zero : it->second;
}

std::uint64_t E1Page::diagonal_rank(int m) const {
  std::uint64_t r = 0;
  for (const auto& [kl, g] : cells) {
    if (kl.first + kl.second == m) r += g.rank;
  }
  return r;
}

std::int64_t E1Page::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& [kl, g] : cells) {
    const auto r = static_cast<std::int64_t>(g.rank);
    chi += ((kl.first + kl.second) % 2 == 0) ? r : -r;
  }
  return chi;
}

std::string E1Page::to_string() const {
  std::ostringstream os;
  for (const auto& [kl, g] : cells) os << "E1[" << kl.first << "," << kl.second << "] = " << g.to_string() << '\n';
  return os.str();
}

namespace {

void add_cell(E1Page& page, int k, int l, const AbelianGroup& g) {
  if (g.is_zero()) return;
  page.cells[{k, l}] += g;
}

}  // namespace

E1Page e1_page(const Poset& p, const std::vector<HomologyProfile>& fibers) {
  const auto levels = level_decomposition(p);
  E1Page page;
  page.n = levels.top();
  if (p.empty()) return page;
  add_cell(page, 0, 0, AbelianGroup::free(levels.levels[0].size()));
  for (int k = 1; k <= levels.top(); ++k) {
    for (Element h : levels.levels[static_cast<std::size_t>(k)]) {
      for (const auto& [j, g] : fibers[h].groups()) add_cell(page, k, j + 1 - k, g);
    }
  }
  return page;
}

E1Page e1_page(const Poset& p) { return e1_page(p, fiber_homologies(p)); }

E1Page e1_page_staged(const Poset& p, const std::vector<Bits>& stages) {
  const std::size_t n = p.size();
  Bits seen(n);
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const Bits& s = stages[i];
    if (s.size() != n) throw InputError("stage bitset has wrong length");
    if (s.intersects(seen)) throw InputError("filtration stages overlap");
    for (auto h = s.find_first(); h != Bits::npos; h = s.find_next(h)) {
      const Bits& down = p.below(static_cast<Element>(h));
      if (i == 0) {
        if (!down.is_subset_of(s)) throw InputError("stage 0 is not a down-set");
      } else if (!down.is_subset_of(seen)) {
        throw InputError("stage " + std::to_string(i) + " has an element above a later stage");
      }
    }
    if (i > 0 && !p.is_antichain(to_elements(s))) {
      throw NotAnAntichain("stage " + std::to_string(i) + " is not an antichain");
    }
    seen |= s;
  }
  if (seen.count() != n) throw InputError("filtration stages do not cover the poset");

  E1Page page;
  page.n = static_cast<int>(stages.size()) - 1;
  if (stages.empty()) return page;
  const auto base = homology(chain_complex(order_complex(p, stages[0])), false);
  for (const auto& [l, g] : base.groups()) add_cell(page, 0, l, g);
  for (std::size_t k = 1; k < stages.size(); ++k) {
    const Bits& s = stages[k];
    for (auto h = s.find_first(); h != Bits::npos; h = s.find_next(h)) {
      const auto fiber = homology(chain_complex(order_complex(p, p.below(static_cast<Element>(h)))), true);
      for (const auto& [j, g] : fiber.groups()) add_cell(page, static_cast<int>(k), j + 1 - static_cast<int>(k), g);
    }
  }
  return page;
}

std::vector<FiltrationQuotientCheck> check_filtration_quotients(const Poset& p,
                                                                const std::vector<HomologyProfile>& fibers) {
  const auto levels = level_decomposition(p);
  std::vector<FiltrationQuotientCheck> out;
  for (int k = 1; k <= levels.top(); ++k) {
    FiltrationQuotientCheck c;
    c.k = k;
    const auto big = order_complex(p, levels.up_to(p.size(), k));
    const auto small = order_complex(p, levels.up_to(p.size(), k - 1));
    c.relative = relative_homology(relative_chain_complex(big, small));
    c.wedge_formula = HomologyProfile(false);
    for (Element h : levels.levels[static_cast<std::size_t>(k)]) c.wedge_formula += fibers[h].shifted(1);
    c.equal = c.relative.same_groups(c.wedge_formula);
    out.push_back(std::move(c));
  }
  return out;
}

FiberStatistics::FiberStatistics(std::vector<std::pair<HomologyProfile, std::uint64_t>> weighted)
    : weighted_(std::move(weighted)) {}

FiberStatistics FiberStatistics::of(const std::vector<HomologyProfile>& fibers) {
  std::vector<std::pair<HomologyProfile, std::uint64_t>> w;
  w.reserve(fibers.size());
  for (const auto& f : fibers) w.emplace_back(f, 1);
  return FiberStatistics(std::move(w));
}

std::uint64_t FiberStatistics::rank_sum(int j) const {
  std::uint64_t r = 0;
  for (const auto& [f, mult] : weighted_) r += mult * f.rank(j);
  return r;
}

bool FiberStatistics::all_zero(int j) const {
  return std::all_of(weighted_.begin(), weighted_.end(), [&](const auto& w) { return w.first.at(j).is_zero(); });
}

bool FiberStatistics::all_torsion_free(int j) const {
  return std::all_of(weighted_.begin(), weighted_.end(),
                     [&](const auto& w) { return w.first.at(j).torsion_free(); });
}

int FiberStatistics::max_hdim() const {
  int best = -1;
  for (const auto& [f, mult] : weighted_) {
    if (mult > 0) best = std::max(best, hdim(f));
  }
  return best;
}

std::int64_t FiberStatistics::poset_reduced_euler() const {
  std::int64_t chi = -1;
  for (const auto& [f, mult] : weighted_) chi -= static_cast<std::int64_t>(mult) * f.euler_characteristic();
  return chi;
}

std::uint64_t betti_upper(const FiberStatistics& s, int m) { return m < 0 ? 0 : s.rank_sum(m - 1); }

std::uint64_t betti_upper(const Poset& p, int m) { return betti_upper(FiberStatistics::of(fiber_homologies(p)), m); }

std::int64_t betti_lower(const FiberStatistics& s, int m) {
  if (m < 0) return 0;
  auto diag = [&](int j) -> std::int64_t { return j < 0 ? 0 : static_cast<std::int64_t>(s.rank_sum(j - 1)); };
  return diag(m) - diag(m + 1) - diag(m - 1);
}

std::int64_t betti_lower(const Poset& p, int m) { return betti_lower(FiberStatistics::of(fiber_homologies(p)), m); }

KnownFacts parse_known_facts(const std::string& text) {
  KnownFacts facts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("known fact must look like m=rank: '" + item + "'");
    try {
      const int m = std::stoi(item.substr(0, eq));
      const auto r = std::stoull(item.substr(eq + 1));
      facts[m] = r;
    } catch (const std::logic_error&) {
      throw ParseError("cannot parse known fact '" + item + "'");
    }
  }
  return facts;
}

VanishingReport vanishing_and_torsion(const FiberStatistics& s, int m) {
  VanishingReport r;
  r.m = m;
  r.fibers_vanish = s.all_zero(m);
  r.implies_vanishing = r.fibers_vanish;
  r.fibers_torsion_free = s.all_torsion_free(m - 1);
  r.implies_torsion_free = r.fibers_torsion_free && r.fibers_vanish;
  r.hdim_bound = 1 + s.max_hdim();
  return r;
}

BoundTable bound_table(const FiberStatistics& s, int max_m, bool nonempty, const KnownFacts& facts,
                       std::optional<std::int64_t> reduced_euler) {
  BoundTable t;
  t.dimension = max_m - 1;
  t.hdim_bound = 1 + s.max_hdim();
  t.reduced_euler = reduced_euler;
  const std::int64_t shift = nonempty ? 1 : 0;
  for (int m = 0; m <= max_m; ++m) {
    BoundRow row;
    row.m = m;
    std::int64_t lo = betti_lower(s, m);
    std::int64_t hi = static_cast<std::int64_t>(betti_upper(s, m));
    if (m == 0) {
      lo -= shift;
      hi = std::max<std::int64_t>(0, hi - shift);
    }
    row.lower_raw = lo;
    row.upper = static_cast<std::uint64_t>(hi);
    row.upper_sum = row.upper;
    row.lower = static_cast<std::uint64_t>(std::max<std::int64_t>(0, lo));
    if (m >= 1) {
      const auto v = vanishing_and_torsion(s, m - 1);
      if (v.implies_vanishing) {
        row.vanishes = true;
        row.upper = 0;
        t.ledger.push_back({"H~_" + std::to_string(m) + " = 0",
                            "every fiber has H~_" + std::to_string(m - 1) + " = 0"});
      }
    }
    const auto tf = vanishing_and_torsion(s, m);
    if (m == 0 || row.vanishes) {
      row.torsion_free = true;
    } else if (tf.implies_torsion_free) {
      row.torsion_free = true;
      t.ledger.push_back({"H~_" + std::to_string(m) + " is torsion-free",
                          "every fiber has H~_" + std::to_string(m) + " = 0 and torsion-free H~_" +
                              std::to_string(m - 1)});
    }
    if (m >= t.hdim_bound + 1 && !row.vanishes) {
      row.vanishes = true;
      row.upper = 0;
      row.torsion_free = true;
      t.ledger.push_back({"H~_" + std::to_string(m) + " = 0",
                          "above 1 + max fiber Hdim = " + std::to_string(t.hdim_bound)});
    }
    if (auto it = facts.find(m); it != facts.end()) {
      row.known = it->second;
      if (it->second > row.upper || it->second < row.lower) {
        throw InputError("known fact H~_" + std::to_string(m) + " = " + std::to_string(it->second) +
                         " contradicts the computed bounds");
      }
      row.lower = row.upper = it->second;
      t.ledger.push_back({"rank H~_" + std::to_string(m) + " = " + std::to_string(it->second), "supplied fact"});
    }
    t.rows.push_back(row);
  }

  // Euler characteristic: (-1)^m r_m = chi~ - sum_{j != m} (-1)^j r_j.
  if (reduced_euler && nonempty && !t.rows.empty()) {
    for (int pass = 0; pass < 2; ++pass) {
      for (auto& row : t.rows) {
        std::int64_t lo = (row.m % 2 == 0) ? *reduced_euler : -*reduced_euler;
        std::int64_t hi = lo;
        for (const auto& other : t.rows) {
          if (other.m == row.m) continue;
          const bool same = (other.m - row.m) % 2 == 0;
          const auto olo = static_cast<std::int64_t>(other.lower);
          const auto ohi = static_cast<std::int64_t>(other.upper);
          lo += same ? -ohi : olo;
          hi += same ? -olo : ohi;
        }
        if (lo > static_cast<std::int64_t>(row.lower)) {
          row.lower = static_cast<std::uint64_t>(lo);
          t.ledger.push_back({"rank H~_" + std::to_string(row.m) + " >= " + std::to_string(lo),
                              "Euler characteristic " + std::to_string(*reduced_euler) + " and the other bounds"});
        }
        if (hi >= 0 && hi < static_cast<std::int64_t>(row.upper)) {
          row.upper = static_cast<std::uint64_t>(hi);
          t.ledger.push_back({"rank H~_" + std::to_string(row.m) + " <= " + std::to_string(hi),
                              "Euler characteristic " + std::to_string(*reduced_euler) + " and the other bounds"});
        }
      }
    }
  }
  return t;
}

}  // namespace grouplat
