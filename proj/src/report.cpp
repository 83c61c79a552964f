#include "grouplat/report.hpp"

#include <iomanip>
#include <sstream>

namespace grouplat {

Json to_json(const AbelianGroup& g) {
  Json j;
  j["group"] = g.to_string();
  j["rank"] = g.rank;
  j["torsion"] = g.torsion;
  return j;
}

Json to_json(const HomologyProfile& h) {
  Json j;
  j["reduced"] = h.reduced();
  Json groups = Json::array();
  for (const auto& [m, g] : h.groups()) {
    Json e;
    e["m"] = m;
    e.update(to_json(g));
    groups.push_back(e);
  }
  j["groups"] = groups;
  j["hdim"] = hdim(h);
  return j;
}

Json to_json(const E1Page& page) {
  Json j;
  j["n"] = page.n;
  Json cells = Json::array();
  for (const auto& [kl, g] : page.cells) {
    Json c;
    c["k"] = kl.first;
    c["l"] = kl.second;
    c.update(to_json(g));
    cells.push_back(c);
  }
  j["cells"] = cells;
  j["euler_characteristic"] = page.euler_characteristic();
  return j;
}

Json to_json(const BoundTable& t) {
  Json j;
  j["dimension"] = t.dimension;
  j["hdim_bound"] = t.hdim_bound;
  if (t.reduced_euler) j["reduced_euler"] = *t.reduced_euler;
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json e;
    e["m"] = r.m;
    e["lower"] = r.lower;
    e["lower_raw"] = r.lower_raw;
    e["upper"] = r.upper;
    e["upper_sum"] = r.upper_sum;
    e["vanishes"] = r.vanishes;
    e["torsion_free"] = r.torsion_free;
    if (r.known) e["known"] = *r.known;
    if (r.actual) e["actual"] = *r.actual;
    rows.push_back(e);
  }
  j["rows"] = rows;
  Json ledger = Json::array();
  for (const auto& c : t.ledger) ledger.push_back({{"statement", c.statement}, {"because", c.hypothesis}});
  j["ledger"] = ledger;
  return j;
}

Json to_json(const GroupBoundsReport& r) {
  Json j;
  j["lattice"] = to_string(r.kind);
  j["group_order"] = r.group_order;
  j["poset_size"] = r.poset_size;
  Json fibers = Json::array();
  for (const auto& f : r.fibers) {
    Json e;
    e["type"] = f.type;
    e["order"] = f.order;
    e["representative"] = f.representative;
    e["class_size"] = f.class_size;
    e["multiplicity"] = f.multiplicity;
    e["fiber_size"] = f.poset_size;
    e["homology"] = to_json(f.homology);
    fibers.push_back(e);
  }
  j["fibers"] = fibers;
  j["bounds"] = to_json(r.table);
  return j;
}

Json to_json(const PipelineReport& r) {
  Json j;
  j["success"] = r.success;
  j["direct"] = to_json(r.direct);
  j["dropped_types"] = r.dropped_types;
  j["euler_after_first_removal"] = r.euler_after_first_removal;
  if (r.thinned_class) j["thinned_s4_class"] = *r.thinned_class;
  j["kept_subgroup"] = r.kept_subgroup;
  j["complement_empty"] = r.complement_empty;
  j["final_trivial"] = r.final_trivial;
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json e;
    e["name"] = s.name;
    e["size_before"] = s.size_before;
    e["size_after"] = s.size_after;
    e["before"] = to_json(s.before);
    e["after"] = to_json(s.after);
    e["isolated"] = to_json(s.isolated);
    e["verified"] = s.verified;
    e["details"] = s.details;
    steps.push_back(e);
  }
  j["steps"] = steps;
  j["attempts"] = r.attempts;
  return j;
}

Json to_json(const DecreasingVerdict& v) {
  Json j;
  j["decreasing"] = v.decreasing;
  j["s"] = v.s;
  j["hdim"] = v.hdim;
  j["dim"] = v.dim;
  j["level_decreasing"] = v.level_decreasing;
  j["level_bounds_hold"] = v.level_bounds_hold;
  return j;
}

Json to_json(const SufficiencyReport& r) {
  Json j;
  j["k"] = r.k;
  j["level_exists"] = r.level_exists;
  j["level_decreasing"] = r.level_decreasing;
  j["s_below"] = r.s_below;
  j["certified"] = r.certified;
  j["fiber_bound_holds"] = r.fiber_bound_holds;
  j["note"] = r.note;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"element", row.h},
                    {"fiber_decreasing", row.fiber_decreasing},
                    {"fiber_s", row.fiber_s},
                    {"fiber_hdim", row.fiber_hdim},
                    {"satisfied", row.satisfied}});
  }
  j["rows"] = rows;
  return j;
}

Json to_json(const LcsReport& r) {
  Json j;
  j["group_order"] = r.group_order;
  j["l_dimension"] = r.l_dimension;
  j["L"] = to_json(r.l);
  j["C"] = to_json(r.c);
  j["S"] = to_json(r.s);
  j["relative"] = to_json(r.relative);
  j["expected_relative"] = to_json(r.expected_relative);
  j["relative_matches"] = r.relative_matches;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"m", row.m},
                    {"s_vanishes", row.s_vanishes},
                    {"c_rank", row.c_rank},
                    {"embed_bound", row.embed_bound},
                    {"c_next_rank", row.c_next_rank},
                    {"surject_bound", row.surject_bound},
                    {"holds", row.holds}});
  }
  j["rows"] = rows;
  if (r.corollary_applies) j["corollary"] = {{"lhs", r.corollary_lhs}, {"rhs", r.corollary_rhs}};
  j["all_hold"] = r.all_hold;
  return j;
}

std::string human(const E1Page& page) {
  std::ostringstream os;
  os << "E1 page, filtration length " << page.n << '\n' << page.to_string();
  os << "alternating rank sum = " << page.euler_characteristic() << '\n';
  return os.str();
}

std::string human(const BoundTable& t) {
  std::ostringstream os;
  if (t.reduced_euler) os << "reduced Euler characteristic " << *t.reduced_euler << '\n';
  os << "Hdim <= " << t.hdim_bound << '\n';
  os << std::setw(4) << "m" << std::setw(10) << "lower" << std::setw(10) << "actual" << std::setw(10) << "upper"
     << std::setw(12) << "fiber sum" << "  notes\n";
  for (const auto& r : t.rows) {
    os << std::setw(4) << r.m << std::setw(10) << r.lower << std::setw(10)
       << (r.actual ? std::to_string(*r.actual) : std::string("-")) << std::setw(10) << r.upper << std::setw(12)
       << r.upper_sum << "  ";
    if (r.vanishes) os << "vanishes ";
    if (r.torsion_free) os << "torsion-free ";
    if (r.known) os << "known ";
    if (r.lower_raw < 0) os << "(raw lower " << r.lower_raw << ")";
    os << '\n';
  }
  for (const auto& c : t.ledger) os << "  * " << c.statement << "  [" << c.hypothesis << "]\n";
  return os.str();
}

std::string human(const GroupBoundsReport& r) {
  std::ostringstream os;
  os << to_string(r.kind) << "G for |G| = " << r.group_order << ": " << r.poset_size << " elements, dimension "
     << r.dimension << '\n';
  os << "fibers by conjugacy class:\n";
  for (const auto& f : r.fibers) {
    os << "  " << std::setw(6) << f.type << "  x" << std::setw(6) << f.multiplicity << "  ";
    std::string h;
    for (int m : f.homology.support()) h += (h.empty() ? "" : ", ") + ("H~" + std::to_string(m) + "=" + f.homology.at(m).to_string());
    os << (h.empty() ? "acyclic" : h) << '\n';
  }
  os << human(r.table);
  return os.str();
}

std::string human(const PipelineReport& r) {
  std::ostringstream os;
  os << "subgroup lattice homology:\n" << r.direct.to_string();
  for (const auto& s : r.steps) {
    os << (s.verified ? "[ok]   " : "[FAIL] ") << s.name << " (" << s.size_before << " -> " << s.size_after
       << " elements)\n";
    for (const auto& d : s.details) os << "         " << d << '\n';
  }
  for (const auto& a : r.attempts) os << "attempt: " << a << '\n';
  if (r.steps.empty()) {
    os << (r.success ? "direct homology matches 48 circles + 48 spheres\n" : "direct homology does not match\n");
  } else {
    os << (r.success ? "48 circles + 48 spheres verified\n" : "verification failed\n");
  }
  return os.str();
}

std::string human(const DecreasingVerdict& v) {
  std::ostringstream os;
  os << (v.decreasing ? "decreasing" : "not decreasing") << ": Hdim " << v.hdim << ", dim " << v.dim
     << ", decreasing levels s = " << v.s << '\n';
  os << "levels:";
  for (std::size_t k = 0; k < v.level_decreasing.size(); ++k) os << ' ' << k << (v.level_decreasing[k] ? "+" : "-");
  os << '\n';
  os << "Hdim <= dim - s: " << (v.level_bounds_hold ? "holds" : "VIOLATED") << '\n';
  return os.str();
}

std::string human(const SufficiencyReport& r, const Poset& p) {
  std::ostringstream os;
  os << "level " << r.k << ": " << r.note << '\n';
  if (!r.level_exists || r.level_decreasing) return os.str();
  os << "decreasing levels below: " << r.s_below << '\n';
  for (const auto& row : r.rows) {
    os << "  " << p.label(row.h) << ": fiber " << (row.fiber_decreasing ? "decreasing" : "not decreasing")
       << ", " << row.fiber_s << " decreasing levels, Hdim " << row.fiber_hdim << (row.satisfied ? "" : "  <- fails")
       << '\n';
  }
  if (r.certified) {
    os << "fiber bound Hdim <= " << r.k - r.s_below - 2 << ": " << (r.fiber_bound_holds ? "holds" : "VIOLATED") << '\n';
  }
  return os.str();
}

std::string human(const LcsReport& r) {
  std::ostringstream os;
  os << "|G| = " << r.group_order << ", dim LG = " << r.l_dimension << '\n';
  os << "LG:\n" << r.l.to_string() << "CG:\n" << r.c.to_string() << "SG:\n" << r.s.to_string();
  os << "H(CG, SG):\n" << r.relative.to_string();
  os << "expected from |G| suspensions of LG: " << (r.relative_matches ? "match" : "MISMATCH") << '\n';
  for (const auto& row : r.rows) {
    os << "  m=" << row.m << ": ";
    if (!row.s_vanishes) {
      os << "H~_m(SG) != 0, no inequality\n";
      continue;
    }
    os << "rank H~_m(CG) = " << row.c_rank << " <= " << row.embed_bound << ", rank H~_{m+1}(CG) = "
       << row.c_next_rank << " >= " << row.surject_bound << (row.holds ? "" : "  VIOLATED") << '\n';
  }
  if (r.corollary_applies) {
    os << "rank H~_{n+1}(CG) = " << r.corollary_lhs << " <= |G| rank H~_n(LG) = " << r.corollary_rhs << '\n';
  }
  os << (r.all_hold ? "all relations hold\n" : "some relation fails\n");
  return os.str();
}

}  // namespace grouplat
