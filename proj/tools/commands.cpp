#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "grouplat/cache.hpp"
#include "grouplat/decreasing.hpp"
#include "grouplat/errors.hpp"
#include "grouplat/group_bounds.hpp"
#include "grouplat/group_posets.hpp"
#include "grouplat/groups.hpp"
#include "grouplat/homology.hpp"
#include "grouplat/io.hpp"
#include "grouplat/lattice.hpp"
#include "grouplat/parallel.hpp"
#include "grouplat/reduce.hpp"
#include "grouplat/report.hpp"
#include "grouplat/spectral.hpp"

namespace grouplat::cli {

namespace {

struct Input {
  std::string description;
  std::string canonical;
  std::optional<SubgroupTable> table;
  std::optional<Poset> poset;
};

struct Context {
  const RunConfig& cfg;
  std::size_t jobs;
  std::unique_ptr<ResultCache> cache;
  Json doc;
  std::ostringstream text;

  bool structured() const { return cfg.format == "structured"; }
};

Input resolve_input(const RunConfig& cfg) {
  const int sources = !cfg.catalog.empty() + !cfg.group_file.empty() + !cfg.poset_file.empty();
  if (sources != 1) {
    throw InputError("exactly one of --catalog, --group-file, --poset-file is required");
  }
  Input in;
  if (!cfg.poset_file.empty()) {
    in.poset = read_poset_file(cfg.poset_file);
    in.description = "poset file " + cfg.poset_file;
    in.canonical = canonical_text(*in.poset);
    return in;
  }
  PermGroup g = cfg.catalog.empty() ? read_group_file(cfg.group_file, cfg.max_order)
                                    : catalog_group(cfg.catalog, cfg.max_order);
  in.description = cfg.catalog.empty() ? "group file " + cfg.group_file : "catalog " + cfg.catalog;
  in.canonical = canonical_text(g);
  in.table = SubgroupTable::enumerate(g, cfg.max_order);
  return in;
}

std::string table_summary(const SubgroupTable& t) {
  std::ostringstream os;
  os << "order " << t.group_order() << ", " << t.size() << " subgroups\n";
  for (const auto& cls : t.classes()) {
    os << "  " << t.type_name(cls.front()) << " x" << cls.size() << '\n';
  }
  return os.str();
}

std::string input_hash(Context& ctx, const Input& in) {
  const std::string hash = content_hash(in.canonical);
  if (ctx.cache && in.table && !ctx.cache->load(hash, "subgroups")) {
    ctx.cache->store(hash, "subgroups", table_summary(*in.table), in.description);
  }
  return hash;
}

void guard_large(const RunConfig& cfg, std::size_t size, const std::string& what) {
  if (size > cfg.max_poset) {
    throw OrderCapExceeded(what + " has " + std::to_string(size) + " elements, above --max-poset " +
                           std::to_string(cfg.max_poset));
  }
  if (size > kLargePoset && !cfg.allow_large) {
    throw OrderCapExceeded(what + " has " + std::to_string(size) +
                           " elements; full homology at this size needs --allow-large");
  }
}

// The poset a command works on, before any reduction.
struct Target {
  Poset poset;
  std::optional<LatticeKind> kind;
};

Target build_target(const RunConfig& cfg, const Input& in) {
  if (in.poset) return {*in.poset, std::nullopt};
  const LatticeKind kind = parse_lattice_kind(cfg.lattice);
  const auto& t = *in.table;
  guard_large(cfg, group_poset_size(t, kind, t.whole()), to_string(kind) + " poset");
  return {group_poset(t, kind, t.whole(), cfg.max_poset).poset, kind};
}

Poset apply_reduction(const std::string& strategy, const Poset& p, const Input& in,
                      const std::optional<LatticeKind>& kind) {
  if (strategy == "none") return p;
  if (strategy != "coatom") throw InputError("unknown reduction '" + strategy + "'");
  if (kind == LatticeKind::Subgroups) return coatom_meet_reduction(p, subgroup_meet_oracle(*in.table));
  return coatom_meet_reduction(p);
}

void describe_input(Context& ctx, const Input& in, const std::optional<LatticeKind>& kind) {
  ctx.doc["command"] = ctx.cfg.command;
  ctx.doc["input"] = in.description;
  if (kind) ctx.doc["lattice"] = to_string(*kind);
  ctx.text << "input: " << in.description << '\n';
  if (kind) ctx.text << "lattice: " << to_string(*kind) << '\n';
}

int dimension_of(const Poset& p) { return level_decomposition(p).top(); }

HomologyProfile cached_homology(Context& ctx, const std::string& hash, const std::string& name,
                                const std::string& desc, const Poset& p) {
  if (ctx.cache) {
    if (auto hit = ctx.cache->load(hash, name)) return parse_profile(*hit);
  }
  HomologyProfile h = reduced_homology(p);
  if (ctx.cache) ctx.cache->store(hash, name, serialize_profile(h), desc);
  return h;
}

int cmd_homology(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Input in = resolve_input(cfg);
  const Target target = build_target(cfg, in);
  describe_input(ctx, in, target.kind);
  const Poset p = apply_reduction(cfg.reduce, target.poset, in, target.kind);
  if (in.poset) guard_large(cfg, p.size(), "poset");

  const std::string hash = input_hash(ctx, in);
  const std::string name = "homology-" + (target.kind ? to_string(*target.kind) : std::string("poset")) + "-" +
                           cfg.reduce;
  const HomologyProfile h = cached_homology(ctx, hash, name, in.description, p);

  const std::int64_t by_faces = reduced_euler(p);
  const std::int64_t by_homology = h.euler_characteristic();
  std::optional<std::int64_t> by_mobius;
  if (p.size() <= kLargePoset) {
    try {
      by_mobius = mobius_bottom_top(as_bounded_lattice(with_bounds(p)));
    } catch (const NotALattice&) {
    }
  }
  const bool consistent = by_faces == by_homology && (!by_mobius || *by_mobius == by_faces);

  Json& r = ctx.doc["result"];
  r["poset_size"] = target.poset.size();
  r["reduction"] = cfg.reduce;
  r["reduced_size"] = p.size();
  r["dimension"] = dimension_of(p);
  r["homology"] = to_json(h);
  r["euler_faces"] = by_faces;
  r["euler_homology"] = by_homology;
  r["mobius"] = by_mobius ? Json(*by_mobius) : Json(nullptr);
  r["hdim"] = hdim(h);
  r["consistent"] = consistent;

  auto& os = ctx.text;
  os << "poset: " << target.poset.size() << " elements";
  if (cfg.reduce != "none") os << ", " << p.size() << " after " << cfg.reduce << " reduction";
  os << ", dimension " << dimension_of(p) << '\n';
  os << "reduced homology:\n";
  if (h.trivial()) os << "  trivial\n";
  std::istringstream lines(h.to_string());
  for (std::string line; std::getline(lines, line);) os << "  " << line << '\n';
  os << "reduced euler characteristic: " << by_faces << " (faces), " << by_homology << " (homology)";
  if (by_mobius) os << ", " << *by_mobius << " (mobius)";
  os << '\n';
  os << "hdim: " << hdim(h) << '\n';

  if (cfg.e1) {
    const E1Page page = e1_page(p, fiber_homologies(p, nullptr, ctx.jobs));
    r["e1"] = to_json(page);
    os << human(page);
  }
  if (!consistent) os << "euler characteristics disagree\n";
  return consistent ? kSuccess : kVerificationFailed;
}

int cmd_bounds(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Input in = resolve_input(cfg);
  const KnownFacts facts = parse_known_facts(cfg.known);
  BoundTable table;
  std::optional<HomologyProfile> actual;
  std::optional<LatticeKind> kind;

  if (in.table) {
    kind = parse_lattice_kind(cfg.lattice);
    describe_input(ctx, in, kind);
    GroupBoundsOptions opts;
    opts.max_poset = cfg.max_poset;
    opts.jobs = ctx.jobs;
    opts.facts = facts;
    opts.cache_prefix = "fibers";
    FiberCache fc;
    const std::string hash = input_hash(ctx, in);
    if (ctx.cache) {
      fc = ctx.cache->fiber_cache(hash, in.description);
      opts.cache = &fc;
    }
    GroupBoundsReport report = group_betti_bounds(*in.table, *kind, opts);
    if (cfg.actual) {
      guard_large(cfg, report.poset_size, to_string(*kind) + " poset");
      const Poset p = group_poset(*in.table, *kind, in.table->whole(), cfg.max_poset).poset;
      actual = cached_homology(ctx, hash, "homology-" + to_string(*kind) + "-none", in.description, p);
    }
    table = report.table;
    ctx.doc["result"] = to_json(report);
    if (!actual) ctx.text << human(report);
  } else {
    describe_input(ctx, in, kind);
    const Poset& p = *in.poset;
    const auto fibers = fiber_homologies(p, nullptr, ctx.jobs);
    table = bound_table(FiberStatistics::of(fibers), dimension_of(p) + 1, !p.empty(), facts, reduced_euler(p));
    if (cfg.actual) actual = reduced_homology(p);
    ctx.doc["result"]["poset_size"] = p.size();
  }

  bool sandwiched = true;
  if (actual) {
    for (auto& row : table.rows) {
      row.actual = actual->rank(row.m);
      if (*row.actual < row.lower || *row.actual > row.upper) sandwiched = false;
    }
    ctx.doc["result"]["actual_within_bounds"] = sandwiched;
  }
  ctx.doc["result"]["table"] = to_json(table);
  if (!in.table || actual) ctx.text << human(table);
  if (!sandwiched) ctx.text << "actual homology falls outside the bounds\n";
  return sandwiched ? kSuccess : kVerificationFailed;
}

int cmd_psl27(Context& ctx) {
  const auto& cfg = ctx.cfg;
  if (!cfg.group_file.empty() || !cfg.poset_file.empty()) {
    throw InputError("psl27 runs on the built-in group only");
  }
  PermGroup g = catalog_group(cfg.catalog.empty() ? "PSL27" : cfg.catalog, cfg.max_order);
  if (g.order() != 168) throw InputError("psl27 needs the group of order 168");
  const SubgroupTable t = SubgroupTable::enumerate(g, cfg.max_order);
  PipelineOptions opts;
  opts.thin_class = cfg.force_class;
  opts.mismatched_complement = cfg.mismatched_complement;
  opts.skip_reduction = cfg.skip_reduction;
  opts.jobs = ctx.jobs;
  const PipelineReport report = psl27_pipeline(t, opts);
  ctx.doc["command"] = cfg.command;
  ctx.doc["input"] = "catalog PSL27";
  ctx.doc["result"] = to_json(report);
  ctx.text << human(report);
  return report.success ? kSuccess : kVerificationFailed;
}

int cmd_decreasing(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Input in = resolve_input(cfg);
  Poset p;
  std::vector<HomologyProfile> fibers;
  HomologyProfile whole;
  std::optional<LatticeKind> kind;
  if (in.table) {
    kind = parse_lattice_kind(cfg.lattice);
    guard_large(cfg, group_poset_size(*in.table, *kind, in.table->whole()), to_string(*kind) + " poset");
    GroupPosetHomology gh = group_poset_homology(*in.table, *kind, cfg.max_poset, ctx.jobs);
    p = std::move(gh.poset.poset);
    fibers = std::move(gh.fibers);
    whole = std::move(gh.homology);
  } else {
    p = *in.poset;
    guard_large(cfg, p.size(), "poset");
    fibers = fiber_homologies(p, nullptr, ctx.jobs);
    whole = reduced_homology(p);
  }
  describe_input(ctx, in, kind);
  const DecreasingClassifier classifier(p, fibers);
  const DecreasingVerdict verdict = classifier.verdict(whole);
  ctx.doc["result"]["verdict"] = to_json(verdict);
  ctx.text << human(verdict);
  bool ok = verdict.level_bounds_hold;
  if (cfg.level) {
    const SufficiencyReport s = classifier.sufficiency(*cfg.level);
    ctx.doc["result"]["sufficiency"] = to_json(s);
    ctx.text << human(s, p);
    ok = ok && s.fiber_bound_holds;
    if (s.certified && !verdict.decreasing) ctx.text << "criterion holds at this level but P is not decreasing\n";
    ctx.doc["result"]["sufficiency"]["conclusion_holds"] = !s.certified || verdict.decreasing;
  }
  if (!ok) ctx.text << "a level bound failed\n";
  return ok ? kSuccess : kVerificationFailed;
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string item; std::getline(is, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_reduce(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Input in = resolve_input(cfg);
  const Target target = build_target(cfg, in);
  describe_input(ctx, in, target.kind);
  if (in.poset) guard_large(cfg, target.poset.size(), "poset");
  const Poset& p = target.poset;

  Poset reduced;
  HomologyProfile before = reduced_homology(p);
  HomologyProfile after;
  Json& r = ctx.doc["result"];
  bool ok = true;

  if (!cfg.remove.empty()) {
    std::vector<Element> m;
    for (const auto& label : split_labels(cfg.remove)) {
      auto e = p.find(label);
      if (!e) throw UnknownElement("no element labelled '" + label + "'");
      m.push_back(*e);
    }
    const WedgeDecomposition d = remove_antichain(p, m);
    const WedgeCheck check = verify_wedge_homology(p, d);
    reduced = d.remainder;
    after = check.remainder;
    ok = check.equal;
    r["operation"] = "remove";
    r["isolated"] = to_json(check.isolated);
    ctx.text << "removed " << m.size() << " elements; isolated:\n" << check.isolated.to_string();
  } else {
    reduced = apply_reduction(cfg.reduce == "none" ? "coatom" : cfg.reduce, p, in, target.kind);
    after = reduced_homology(reduced);
    ok = before.same_groups(after);
    const Poset again = apply_reduction("coatom", reduced, in, target.kind);
    r["operation"] = "coatom";
    r["idempotent"] = again.size() == reduced.size();
    ctx.text << "coatom reduction: " << p.size() << " -> " << reduced.size() << " elements"
             << (again.size() == reduced.size() ? " (fixed point)" : "") << '\n';
  }
  r["size_before"] = p.size();
  r["size_after"] = reduced.size();
  r["before"] = to_json(before);
  r["after"] = to_json(after);
  r["homology_preserved"] = ok;
  ctx.text << "homology before:\n" << before.to_string() << "homology after:\n" << after.to_string();
  ctx.text << (ok ? "homology verified\n" : "homology mismatch\n");

  if (!cfg.output.empty()) {
    std::ofstream out(cfg.output);
    if (!out) throw InputError("cannot write '" + cfg.output + "'");
    write_poset(out, reduced);
  }
  return ok ? kSuccess : kVerificationFailed;
}

int cmd_lcs(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Input in = resolve_input(cfg);
  if (!in.table) throw InputError("lcs-check needs a group");
  guard_large(cfg, group_poset_size(*in.table, LatticeKind::Cosets, in.table->whole()), "coset poset");
  describe_input(ctx, in, std::nullopt);
  const LcsReport report = lcs_relation_check(*in.table, cfg.max_poset, ctx.jobs);
  ctx.doc["result"] = to_json(report);
  ctx.text << human(report);
  return report.all_hold && report.relative_matches ? kSuccess : kVerificationFailed;
}

int dispatch(Context& ctx) {
  const std::string& c = ctx.cfg.command;
  if (c == "homology") return cmd_homology(ctx);
  if (c == "bounds") return cmd_bounds(ctx);
  if (c == "psl27") return cmd_psl27(ctx);
  if (c == "decreasing") return cmd_decreasing(ctx);
  if (c == "reduce") return cmd_reduce(ctx);
  if (c == "lcs-check") return cmd_lcs(ctx);
  throw InputError("unknown command '" + c + "'");
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.max_order == 0 || cfg.max_poset == 0) throw InputError("caps must be positive");
    if (cfg.format != "human" && cfg.format != "structured") {
      throw InputError("--format must be human or structured");
    }
    Context ctx{cfg, resolve_jobs(cfg.jobs), nullptr, Json::object(), {}};
    if (!cfg.cache_dir.empty()) ctx.cache = std::make_unique<ResultCache>(cfg.cache_dir);
    const int code = dispatch(ctx);
    if (ctx.structured()) {
      ctx.doc["exit_code"] = code;
      out << ctx.doc.dump(2) << '\n';
    } else {
      out << ctx.text.str();
    }
    return code;
  } catch (const OrderCapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace grouplat::cli
