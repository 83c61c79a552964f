#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using grouplat::cli::RunConfig;

namespace {

void add_common(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--catalog", cfg.catalog, "built-in group (S3, Z6, Z12, D8, Q8, S4, A4, A5, PSL27, Z2^3, Z<n>, D<2n>)");
  sub.add_option("--group-file", cfg.group_file, "group file with 'deg n' and 'gen (...)' lines");
  sub.add_option("--poset-file", cfg.poset_file, "poset file with 'e label' and 'r a b' lines");
  sub.add_option("--lattice", cfg.lattice, "L (subgroups), C (cosets) or S (punctured cosets)")
      ->check(CLI::IsMember({"L", "C", "S"}));
  sub.add_option("--max-order", cfg.max_order, "largest group order to enumerate");
  sub.add_option("--max-poset", cfg.max_poset, "largest poset to build");
  sub.add_flag("--allow-large", cfg.allow_large, "permit full homology on posets above the large threshold");
  sub.add_option("--jobs", cfg.jobs, "worker threads, 0 for all cores");
  sub.add_option("--cache-dir", cfg.cache_dir, "directory for cached results");
  sub.add_option("--format", cfg.format, "human or structured")->check(CLI::IsMember({"human", "structured"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer homology of subgroup and coset posets"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* homology = app.add_subcommand("homology", "reduced homology of a poset or group poset");
  add_common(*homology, cfg);
  homology->add_option("--reduce", cfg.reduce, "coatom or none")->check(CLI::IsMember({"coatom", "none"}));
  homology->add_flag("--e1", cfg.e1, "print the E1 page of the level filtration");

  auto* bounds = app.add_subcommand("bounds", "Betti bounds from lower fibers");
  add_common(*bounds, cfg);
  bounds->add_option("--known", cfg.known, "known reduced ranks, e.g. 0=0,1=0");
  bounds->add_flag("--actual", cfg.actual, "also compute the actual ranks");

  auto* psl27 = app.add_subcommand("psl27", "reduction pipeline for the subgroup lattice of PSL(2,7)");
  add_common(*psl27, cfg);
  psl27->add_flag("--skip-reduction", cfg.skip_reduction, "only compute the homology directly");
  psl27->add_option("--thin-class", cfg.force_class, "S4 conjugacy class to thin (0 or 1)");
  psl27->add_flag("--mismatched-complement", cfg.mismatched_complement,
                  "take the complement subgroup from the wrong class");

  auto* decreasing = app.add_subcommand("decreasing", "decreasing-poset classifier");
  add_common(*decreasing, cfg);
  decreasing->add_option("--level", cfg.level, "check the sufficient condition at this level");

  auto* reduce = app.add_subcommand("reduce", "apply a reduction and verify homology");
  add_common(*reduce, cfg);
  reduce->add_option("--reduce", cfg.reduce, "coatom")->check(CLI::IsMember({"coatom", "none"}));
  reduce->add_option("--remove", cfg.remove, "comma-separated antichain to remove instead");
  reduce->add_option("--output", cfg.output, "write the resulting poset here");

  auto* lcs = app.add_subcommand("lcs-check", "exact sequence of the coset pair");
  add_common(*lcs, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : grouplat::cli::kInputError;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  return grouplat::cli::run(cfg, std::cout, std::cerr);
}
