// Command-line front end: analyze a group, query predicates, reproduce the
// order-1260 worked example, run verification campaigns over the catalog.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sigma/catalog.hpp"
#include "sigma/group_io.hpp"
#include "sigma/harness.hpp"
#include "sigma/report.hpp"

namespace {

using namespace sigma;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FiniteGroup resolve_group(const std::string& source, std::uint64_t catalog_bound) {
  if (std::filesystem::exists(source)) return load_group(source);
  if (source.find('(') != std::string::npos) return parse_constructor(source);
  auto entries = corpus(catalog_bound);
  if (const CatalogEntry* e = find_entry(entries, source)) return e->group;
  throw UsageError("unknown group \"" + source +
                   "\": not a file, catalog name, or constructor expression");
}

FiniteGroup load_subgroup(const std::string& path, const FiniteGroup& ambient) {
  if (!std::filesystem::exists(path)) throw UsageError("subgroup file not found: " + path);
  FiniteGroup sub = load_group(path);
  if (sub.degree() != ambient.degree())
    throw UsageError("subgroup degree " + std::to_string(sub.degree()) +
                     " does not match the ambient degree " + std::to_string(ambient.degree()));
  for (const Permutation& g : sub.generators())
    if (!ambient.contains(g))
      throw UsageError("subgroup generator " + g.to_cycle_string() +
                       " lies outside the ambient group");
  return subgroup_generated(ambient, sub.generators());
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  out << text;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_analyze(const std::string& source, const std::string& sigma_text, std::uint32_t cutoff,
                const std::string& format, const std::string& output) {
  FiniteGroup g = resolve_group(source, cutoff);
  SigmaAnalysis an(g, cutoff);
  const SubgroupLattice& lat = an.lattice();
  SubIdx top = lat.top();
  SigmaPartition sigma = SigmaPartition::parse(sigma_text, an.pi());
  SigmaContext& ctx = an.context(sigma);

  StructureFlags flags = structure_predicates(g);
  const auto& factors = lat.chief_series(top).factors;
  auto blocks = ctx.block_list(top);
  auto sets = ctx.complete_hall_sets(top);

  if (format == "json") {
    nlohmann::json doc;
    doc["group"] = source;
    doc["degree"] = g.degree();
    doc["order"] = g.order();
    doc["pi"] = an.pi();
    doc["partition"] = sigma.to_string();
    doc["soluble"] = flags.soluble;
    doc["nilpotent"] = flags.nilpotent;
    doc["supersoluble"] = lat.is_supersoluble(top);
    doc["sigma_soluble"] = ctx.sigma_soluble(top);
    doc["sigma_nilpotent"] = ctx.sigma_nilpotent(top);
    doc["sigma_full"] = ctx.sigma_full(top);
    doc["sigma_full_sylow_type"] = ctx.sylow_type(top);
    doc["chief_factor_orders"] = nlohmann::json::array();
    for (const ChiefFactor& f : factors) doc["chief_factor_orders"].push_back(f.order);
    doc["subgroups"] = lat.size();
    doc["subgroup_classes"] = lat.conjugacy_classes().size();
    doc["complete_hall_sigma_sets"] = sets.size();
    nlohmann::json halls = nlohmann::json::array();
    for (std::size_t block : blocks) {
      auto list = ctx.hall_subgroups(top, BlockMask{1} << block);
      nlohmann::json item;
      item["block"] = block < sigma.block_count() ? nlohmann::json(sigma.block(block))
                                                  : nlohmann::json("residual");
      item["count"] = list.size();
      item["order"] = list.empty() ? 0 : lat.order_of(list.front());
      item["classes"] = ctx.hall_classes(top, block).size();
      halls.push_back(std::move(item));
    }
    doc["hall_subgroups"] = std::move(halls);
    write_output(doc.dump(2) + "\n", output);
    return 0;
  }

  std::ostringstream os;
  os << "group: " << source << "\n";
  os << "degree: " << g.degree() << "  order: " << g.order() << "\n";
  os << "pi(G):";
  for (std::uint64_t p : an.pi()) os << " " << p;
  os << "\n";
  os << "partition: " << sigma.to_string() << "\n";
  os << "soluble: " << yesno(flags.soluble) << "  nilpotent: " << yesno(flags.nilpotent)
     << "  supersoluble: " << yesno(lat.is_supersoluble(top)) << "\n";
  os << "sigma-soluble: " << yesno(ctx.sigma_soluble(top))
     << "  sigma-nilpotent: " << yesno(ctx.sigma_nilpotent(top)) << "\n";
  os << "sigma-full: " << yesno(ctx.sigma_full(top))
     << "  sigma-full of Sylow type: " << yesno(ctx.sylow_type(top)) << "\n";
  os << "chief factor orders:";
  for (const ChiefFactor& f : factors) os << " " << f.order;
  os << "\n";
  os << "subgroups: " << lat.size() << " in " << lat.conjugacy_classes().size() << " classes\n";
  for (std::size_t block : blocks) {
    auto list = ctx.hall_subgroups(top, BlockMask{1} << block);
    os << "Hall subgroups for block ";
    if (block < sigma.block_count()) {
      os << "{";
      for (std::size_t k = 0; k < sigma.block(block).size(); ++k)
        os << (k ? "," : "") << sigma.block(block)[k];
      os << "}";
    } else {
      os << "(residual)";
    }
    os << ": " << list.size();
    if (!list.empty())
      os << " of order " << lat.order_of(list.front()) << " in "
         << ctx.hall_classes(top, block).size() << " classes";
    os << "\n";
  }
  os << "complete Hall sigma-sets: " << sets.size() << "\n";
  write_output(os.str(), output);
  return 0;
}

int cmd_predicate(const std::string& name, const std::string& source, const std::string& sub_path,
                  const std::string& with_path, const std::string& sigma_text,
                  std::uint32_t cutoff) {
  FiniteGroup g = resolve_group(source, cutoff);
  SigmaAnalysis an(g, cutoff);
  const SubgroupLattice& lat = an.lattice();
  SubIdx top = lat.top();
  SigmaPartition sigma = SigmaPartition::parse(sigma_text, an.pi());
  SigmaContext& ctx = an.context(sigma);

  const bool group_level = name == "sigma-soluble" || name == "sigma-nilpotent" ||
                           name == "soluble" || name == "nilpotent" || name == "supersoluble" ||
                           name == "sigma-full" || name == "sigma-full-sylow-type";
  if (!group_level && sub_path.empty())
    throw UsageError("predicate \"" + name + "\" needs --sub");

  SubIdx h = top;
  if (!sub_path.empty()) h = an.locate(load_subgroup(sub_path, g));

  if (name == "sigma-soluble") {
    std::cout << (ctx.sigma_soluble(top) ? "true" : "false") << "\n";
  } else if (name == "sigma-nilpotent") {
    std::cout << (ctx.sigma_nilpotent(top) ? "true" : "false") << "\n";
  } else if (name == "soluble") {
    std::cout << (lat.is_soluble(top) ? "true" : "false") << "\n";
  } else if (name == "nilpotent") {
    std::cout << (lat.is_nilpotent_subgroup(top) ? "true" : "false") << "\n";
  } else if (name == "supersoluble") {
    std::cout << (lat.is_supersoluble(top) ? "true" : "false") << "\n";
  } else if (name == "sigma-full") {
    std::cout << (ctx.sigma_full(top) ? "true" : "false") << "\n";
  } else if (name == "sigma-full-sylow-type") {
    std::cout << (ctx.sylow_type(top) ? "true" : "false") << "\n";
  } else if (name == "sigma-subnormal") {
    bool ok = ctx.sigma_subnormal(h, top);
    std::cout << (ok ? "true" : "false");
    if (ok) {
      std::cout << ", chain orders:";
      for (SubIdx c : ctx.subnormal_chain(h, top)) std::cout << " " << lat.order_of(c);
    }
    std::cout << "\n";
  } else if (name == "sigma-permutable") {
    bool ok = ctx.sigma_permutable(h, top);
    std::cout << (ok ? "true" : "false");
    if (ok) {
      auto w = ctx.sigma_permutable_witness(h, top);
      if (w) {
        std::cout << ", Hall set orders:";
        for (auto& [block, idx] : w->members) std::cout << " " << lat.order_of(idx);
      }
    }
    std::cout << "\n";
  } else if (name == "weakly-sigma-permutable") {
    auto r = ctx.weakly_sigma_permutable(h, top);
    std::cout << (r.ok ? "true" : "false");
    if (r.ok) std::cout << ", witness |T| = " << lat.order_of(r.supplement);
    std::cout << "\n";
  } else if (name == "sigma-core") {
    SubIdx core = ctx.sigma_core(h, top);
    std::cout << "order " << lat.order_of(core) << "\n";
    std::cout << format_group(lat.as_group(core));
  } else if (name == "subnormal") {
    std::cout << (lat.is_subnormal(h, top) ? "true" : "false") << "\n";
  } else if (name == "s-permutable") {
    std::cout << (lat.s_permutable(h, top) ? "true" : "false") << "\n";
  } else if (name == "weakly-s-permutable") {
    auto r = lat.weakly_s_permutable(h, top);
    std::cout << (r.ok ? "true" : "false");
    if (r.ok) std::cout << ", witness |T| = " << lat.order_of(r.t);
    std::cout << "\n";
  } else if (name == "c-normal") {
    std::cout << (lat.c_normal(h, top) ? "true" : "false") << "\n";
  } else if (name == "hypercyclically-embedded") {
    if (!lat.is_normal_in(h, top)) throw UsageError("--sub must be normal in the group");
    std::cout << (lat.hypercyclically_embedded(h, top) ? "true" : "false") << "\n";
  } else if (name == "permutes") {
    if (with_path.empty()) throw UsageError("predicate \"permutes\" needs --with");
    SubIdx k = an.locate(load_subgroup(with_path, g));
    std::cout << (lat.permutes(h, k) ? "true" : "false") << "\n";
  } else {
    throw UsageError("unknown predicate \"" + name + "\"");
  }
  return 0;
}

int cmd_example12(const std::string& format, const std::string& output) {
  VerificationReport rep = example_1_2_report();
  if (format == "json") {
    nlohmann::json doc = report_to_json(rep);
    write_output(doc.dump(2) + "\n", output);
  } else {
    write_output(report_to_text(rep), output);
  }
  return rep.aborted || !rep.all_consistent() ? 1 : 0;
}

int cmd_campaign(const CampaignConfig& cfg, const std::string& format,
                 const std::string& output) {
  VerificationReport rep = run_campaign(corpus(cfg.max_order), cfg);
  if (format == "json") {
    nlohmann::json doc = report_to_json(rep);
    write_output(doc.dump(2) + "\n", output);
  } else {
    write_output(report_to_text(rep), output);
  }
  return rep.aborted || !rep.all_consistent() || !rep.suites_clean() ? 1 : 0;
}

int cmd_list_catalog(std::uint64_t max_order) {
  std::cout << catalog_manifest(corpus(max_order));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite permutation group toolkit for sigma-permutability analysis"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion +
                                        " (report schema " + kSchemaVersion + ")");
  app.require_subcommand(1);

  std::string group_source, sigma_text = "singletons", sub_path, with_path, predicate_name;
  std::string format = "text", output;
  std::uint32_t cutoff = SubgroupLattice::kDefaultCutoff;
  CampaignConfig cfg;
  cfg.jobs = 4;
  std::string policy_text = "all";
  std::uint64_t list_max = SubgroupLattice::kDefaultCutoff;

  CLI::App* analyze = app.add_subcommand("analyze", "structure and Hall inventory of one group");
  analyze->add_option("--group", group_source, "catalog name, group file, or constructor")
      ->required();
  analyze->add_option("--sigma", sigma_text, "partition string, or singletons/whole");
  analyze->add_option("--cutoff", cutoff, "lattice cutoff")->envname("SIGMA_GROUPS_CUTOFF");
  analyze->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--output", output, "output path (default stdout)");

  CLI::App* predicate = app.add_subcommand("predicate", "evaluate one named predicate");
  predicate->add_option("name", predicate_name, "predicate name")->required();
  predicate->add_option("--group", group_source, "ambient group")->required();
  predicate->add_option("--sub", sub_path, "subgroup generator file");
  predicate->add_option("--with", with_path, "second subgroup file (permutes)");
  predicate->add_option("--sigma", sigma_text, "partition string");
  predicate->add_option("--cutoff", cutoff, "lattice cutoff")->envname("SIGMA_GROUPS_CUTOFF");

  CLI::App* example12 =
      app.add_subcommand("example12", "reproduce the order-1260 worked example");
  example12->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  example12->add_option("--output", output, "output path (default stdout)");

  CLI::App* campaign = app.add_subcommand("campaign", "theorem and lemma sweep over the catalog");
  campaign->add_option("--max-order", cfg.max_order, "corpus order bound");
  campaign->add_option("--policy", policy_text, "all | singletons | whole | listed")
      ->check(CLI::IsMember({"all", "singletons", "whole", "listed"}));
  campaign->add_option("--partitions", cfg.listed_partitions,
                       "partition strings for --policy listed");
  campaign->add_option("--jobs", cfg.jobs, "parallel jobs")->envname("SIGMA_GROUPS_JOBS");
  campaign->add_option("--budget", cfg.budget_seconds, "seconds per (group, partition)");
  campaign->add_option("--seed", cfg.seed, "sampling seed");
  campaign->add_option("--cutoff", cfg.lattice_cutoff, "lattice cutoff")
      ->envname("SIGMA_GROUPS_CUTOFF");
  campaign->add_option("--samples", cfg.samples_per_suite, "samples per lemma suite");
  campaign->add_flag("--no-lemmas", "skip the lemma suites");
  campaign->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  campaign->add_option("--output", output, "output path (default stdout)");

  CLI::App* list_cat = app.add_subcommand("list-catalog", "print the catalog manifest");
  list_cat->add_option("--max-order", list_max, "order bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return cmd_analyze(group_source, sigma_text, cutoff, format, output);
    if (*predicate)
      return cmd_predicate(predicate_name, group_source, sub_path, with_path, sigma_text, cutoff);
    if (*example12) return cmd_example12(format, output);
    if (*campaign) {
      cfg.policy = parse_policy(policy_text);
      cfg.lemma_suites = campaign->count("--no-lemmas") == 0;
      return cmd_campaign(cfg, format, output);
    }
    if (*list_cat) return cmd_list_catalog(list_max);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CutoffExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --cutoff)\n";
    return 2;
  } catch (const GroupParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
