// fusionlab CLI: analyze a group, inspect a fusion system, check one theorem,
// or sweep the corpus.
//
// Exit codes: 0 clean, 1 violation found, 2 input error, 3 resource limit
// (sweeps only report 3 under --strict-limits).

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "fusionlab/fusionlab.hpp"

namespace fl = fusionlab;

namespace {

fl::Group resolve_target(const std::string& target, int max_order) {
  const std::string prefix = "builtin:";
  if (target.rfind(prefix, 0) == 0) {
    std::string name = target.substr(prefix.size());
    for (fl::Group& g : fl::builtin_corpus())
      if (g.id == name) {
        if (g.order > max_order)
          throw fl::ResourceLimitError("group order " + std::to_string(g.order) +
                                       " exceeds --max-order " + std::to_string(max_order));
        return std::move(g);
      }
    throw fl::PreconditionError("unknown builtin group '" + name + "'");
  }
  return fl::load_group_file(target, max_order);
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string members_of(const fl::ElemSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int x) {
    if (!first) out += " ";
    out += std::to_string(x);
    first = false;
  });
  return out + "}";
}

void print_named_subgroup(fl::GroupContext& ctx, const char* name, int idx) {
  std::cout << "  " << name << ": order " << ctx.sub(idx).count() << " " << members_of(ctx.sub(idx))
            << "\n";
}

int cmd_analyze(const std::string& target, int max_order, int max_subgroups, bool show_lattice,
                bool show_char, bool show_supp) {
  auto ctx = std::make_shared<fl::GroupContext>(resolve_target(target, max_order), max_subgroups);
  const fl::Group& g = ctx->g;
  std::cout << "group " << g.id << " (order " << g.order << ")\n";
  std::cout << "  exponent: " << fl::exponent_of(g, g.full_set()) << "\n";
  std::cout << "  abelian: " << yn(fl::is_abelian_set(g, g.full_set())) << "\n";
  std::cout << "  cyclic: " << yn(fl::is_cyclic_subgroup(g, g.full_set())) << "\n";
  std::cout << "  nilpotent: " << yn(fl::is_nilpotent_in(*ctx, g.full_set())) << "\n";
  std::cout << "  solvable: " << yn(fl::is_solvable_set(g, g.full_set())) << "\n";
  std::cout << "  supersolvable: " << yn(fl::is_supersolvable_group(g)) << "\n";
  std::cout << "  simple: " << yn(fl::is_simple_group(g)) << "\n";
  std::cout << "  perfect: " << yn(fl::is_perfect_set(g, g.full_set())) << "\n";
  for (int p : ctx->primes())
    std::cout << "  " << p << "-nilpotent: " << yn(fl::is_p_nilpotent_in(*ctx, g.full_set(), p))
              << "\n";
  std::cout << "  center: order " << ctx->center().count() << " " << members_of(ctx->center())
            << "\n";
  fl::ElemSet der = fl::derived_subgroup(g, g.full_set());
  std::cout << "  derived subgroup: order " << der.count() << " " << members_of(der) << "\n";
  if (g.order <= 60) {
    std::cout << "  elements:\n";
    for (int i = 0; i < g.order; ++i) std::cout << "    [" << i << "] " << g.label(i) << "\n";
  }

  if (show_lattice) {
    const fl::SubgroupLattice& lat = ctx->lattice();
    std::cout << "subgroup lattice: " << lat.size() << " subgroups in " << lat.conj_classes.size()
              << " conjugacy classes\n";
    for (int i = 0; i < lat.size(); ++i) {
      std::cout << "  [" << i << "] order " << lat.at(i).count()
                << (lat.is_normal(i) ? " normal" : "") << " class " << lat.conj_class_id[i] << " "
                << members_of(lat.at(i)) << "\n";
    }
    std::cout << "chief series factors:";
    for (const fl::ChiefFactor& f : fl::chief_series(g)) std::cout << " " << f.order;
    std::cout << "\n";
  }

  if (show_char) {
    std::cout << "characteristic subgroups:\n";
    print_named_subgroup(*ctx, "center Z(G)", ctx->sub_index(ctx->center()));
    print_named_subgroup(*ctx, "Frattini Phi(G)", fl::frattini_in(*ctx, ctx->full_idx()));
    print_named_subgroup(*ctx, "Fitting F(G)", fl::fitting_in(*ctx, g.full_set()));
    print_named_subgroup(*ctx, "layer E(G)", fl::layer_in(*ctx, g.full_set()));
    print_named_subgroup(*ctx, "generalized Fitting F*(G)",
                         fl::generalized_fitting_in(*ctx, g.full_set()));
    print_named_subgroup(*ctx, "U-hypercenter", fl::u_hypercenter(*ctx));
    print_named_subgroup(*ctx, "nilpotent residual", fl::nilpotent_residual(*ctx));
  }

  if (show_supp) {
    const fl::SubgroupLattice& lat = ctx->lattice();
    std::cout << "supplement profiles (flags: complemented c-supplemented SPhi weakly-S "
                 "weakly-cPhi weakly-SPhi supersoluble-supplement):\n";
    for (int i = 0; i < lat.size(); ++i) {
      auto prof = fl::supplementation_profile(*ctx, i);
      std::cout << "  [" << i << "] order " << lat.at(i).count() << " flags "
                << prof->complemented << prof->c_supplemented << prof->s_phi_supplemented
                << prof->weakly_s_supplemented << prof->weakly_c_phi_supplemented
                << prof->weakly_s_phi_supplemented << prof->has_supersoluble_supplement
                << " supplements " << prof->supplements.size() << "\n";
    }
  }
  return 0;
}

int cmd_fusion(const std::string& target, int p, int max_order, int max_subgroups,
               bool show_essential, bool show_strongly_closed, bool show_supersolvable) {
  auto ctx = std::make_shared<fl::GroupContext>(resolve_target(target, max_order), max_subgroups);
  fl::FusionSystem f(ctx, p);
  std::cout << "fusion system F_S(" << ctx->g.id << ") at p=" << p << "\n";
  std::cout << "  S: order " << f.sylow().count() << " " << members_of(f.sylow()) << "\n";
  std::cout << "  objects: " << f.objects.size() << "\n";

  if (show_essential) {
    std::cout << "essential subgroups:\n";
    bool any = false;
    for (int q : f.objects)
      if (f.essential(q)) {
        any = true;
        std::cout << "  order " << ctx->sub(q).count() << " " << members_of(ctx->sub(q))
                  << " out_f order " << f.out_f(q).order << "\n";
      }
    if (!any) std::cout << "  (none)\n";
    std::cout << "essential star:\n";
    for (int q : f.essential_star())
      std::cout << "  order " << ctx->sub(q).count() << " " << members_of(ctx->sub(q))
                << (q == f.sylow_idx ? " (S)" : "") << "\n";
  }

  if (show_strongly_closed) {
    std::cout << "strongly closed subgroups:\n";
    for (int q : f.strongly_closed_subgroups())
      std::cout << "  order " << ctx->sub(q).count() << " " << members_of(ctx->sub(q)) << "\n";
  }

  if (show_supersolvable) {
    fl::FusionSystem::SupersolvableResult r = f.supersolvable();
    std::cout << "supersolvable: " << yn(r.value) << "\n";
    if (r.value) {
      std::cout << "  chain:";
      for (int q : r.chain) std::cout << " order " << ctx->sub(q).count();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_check(const std::string& id, const std::string& target, int max_order, int max_subgroups) {
  const auto& ids = fl::theorem_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    std::cerr << "error: unknown theorem id '" << id << "'; valid ids:";
    for (const std::string& t : ids) std::cerr << " " << t;
    std::cerr << "\n";
    return 2;
  }
  auto ctx = std::make_shared<fl::GroupContext>(resolve_target(target, max_order), max_subgroups);
  fl::CheckConfig cfg;
  cfg.max_order = max_order;
  cfg.max_subgroups = max_subgroups;
  fl::TheoremReport r = fl::check_by_id(ctx, cfg, id);
  std::cout << fl::render_text(r);
  return r.violations.empty() ? 0 : 1;
}

int resolve_jobs(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("FUSIONLAB_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

int cmd_sweep(const std::string& corpus, const std::string& json_path, int max_order,
              int max_subgroups, int jobs, bool timings, bool thm32_strict, bool inject_fault,
              bool strict_limits) {
  fl::CheckConfig cfg;
  cfg.max_order = max_order;
  cfg.max_subgroups = max_subgroups;
  cfg.thm32_strict_scope = thm32_strict;
  cfg.fault_weakly_sphi_true = inject_fault;

  std::vector<fl::Group> groups;
  std::string corpus_version;
  // Groups whose files exceeded a resource limit at load time, keyed by
  // position in the file order.
  std::vector<std::pair<size_t, fl::GroupAudit>> preskipped;
  if (corpus == "builtin") {
    groups = fl::builtin_corpus();
    corpus_version = fl::kCorpusVersion;
  } else {
    namespace fs = std::filesystem;
    if (!fs::is_directory(corpus)) {
      std::cerr << "error: corpus '" << corpus << "' is neither 'builtin' nor a directory\n";
      return 2;
    }
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(corpus))
      if (entry.is_regular_file() && entry.path().extension() == ".grp")
        files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    size_t pos = 0;
    for (const std::string& path : files) {
      try {
        groups.push_back(fl::load_group_file(path, max_order));
      } catch (const fl::ResourceLimitError& e) {
        fl::GroupAudit a;
        a.name = fs::path(path).stem().string();
        a.order = 0;
        a.resource_limited = true;
        a.skipped.push_back(std::string("resource limit: ") + e.what());
        preskipped.emplace_back(pos, std::move(a));
      }
      ++pos;
    }
    corpus_version = "dir:" + corpus;
  }

  fl::SweepReport sr = fl::sweep(groups, cfg, resolve_jobs(jobs), corpus_version);
  if (!preskipped.empty()) {
    for (const auto& [pos, audit] : preskipped)
      sr.groups.insert(sr.groups.begin() + static_cast<long>(pos), audit);
  }

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write '" << json_path << "'\n";
      return 2;
    }
    out << fl::to_json(sr, timings).dump(2) << "\n";
  }
  std::cout << fl::to_markdown(sr);

  if (!sr.pass) return 1;
  if (strict_limits)
    for (const fl::GroupAudit& a : sr.groups)
      if (a.resource_limited) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusionlab: finite-group computation engine and theorem-audit harness"};
  app.require_subcommand(1);
  // Let the global caps be written after the subcommand too.
  app.fallthrough();
  int max_order = 5000;
  int max_subgroups = 100000;
  app.add_option("--max-order", max_order, "largest group order accepted")
      ->capture_default_str();
  app.add_option("--max-subgroups", max_subgroups, "largest subgroup lattice accepted")
      ->capture_default_str();

  std::string target;
  bool show_lattice = false, show_char = false, show_supp = false;
  CLI::App* analyze = app.add_subcommand("analyze", "structural report for one group");
  analyze->add_option("target", target, "group file or builtin:NAME")->required();
  analyze->add_flag("--lattice", show_lattice, "list the full subgroup lattice");
  analyze->add_flag("--char-subgroups", show_char, "list characteristic subgroups");
  analyze->add_flag("--supplements", show_supp, "list supplement profiles for every subgroup");

  int prime = 0;
  bool show_essential = false, show_sc = false, show_ss = false;
  CLI::App* fusion = app.add_subcommand("fusion", "fusion system report for one group");
  fusion->add_option("target", target, "group file or builtin:NAME")->required();
  fusion->add_option("-p,--prime", prime, "prime for the Sylow subgroup")->required();
  fusion->add_flag("--essential", show_essential, "list essential subgroups and essential star");
  fusion->add_flag("--strongly-closed", show_sc, "list strongly closed subgroups");
  fusion->add_flag("--supersolvable", show_ss, "decide supersolvability of the fusion system");

  std::string theorem_id;
  CLI::App* check = app.add_subcommand("check", "run one theorem check on one group");
  check->add_option("theorem_id", theorem_id, "hierarchy, lem_2_1 .. lem_2_3, thm_3_1 .. thm_3_4, thm_main, cor_4_2")
      ->required();
  check->add_option("target", target, "group file or builtin:NAME")->required();

  std::string corpus = "builtin";
  std::string json_path;
  int sweep_max_order = -1;
  int jobs = 0;
  bool timings = false, thm32_strict = false, inject_fault = false, strict_limits = false;
  CLI::App* sweep = app.add_subcommand("sweep", "audit every theorem over a corpus");
  sweep->add_option("--corpus", corpus, "'builtin' or a directory of .grp files")
      ->capture_default_str();
  sweep->add_option("--json", json_path, "write the full JSON report to this path");
  sweep->add_option("--max-order", sweep_max_order, "skip groups above this order");
  sweep->add_option("--jobs", jobs, "worker threads (default: FUSIONLAB_JOBS or hardware)");
  sweep->add_flag("--timings", timings, "include wall-clock timings in the JSON report");
  sweep->add_flag("--thm32-strict", thm32_strict,
                  "quantify the order-4 clause of thm_3_2 over all of G");
  sweep->add_flag("--inject-fault", inject_fault,
                  "treat every subgroup as weakly SPhi-supplemented (harness self-test)");
  sweep->add_flag("--strict-limits", strict_limits, "exit 3 if any group hit a resource limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze)
      return cmd_analyze(target, max_order, max_subgroups, show_lattice, show_char, show_supp);
    if (*fusion)
      return cmd_fusion(target, prime, max_order, max_subgroups, show_essential, show_sc, show_ss);
    if (*check) return cmd_check(theorem_id, target, max_order, max_subgroups);
    if (*sweep)
      return cmd_sweep(corpus, json_path, sweep_max_order >= 0 ? sweep_max_order : max_order,
                       max_subgroups, jobs, timings, thm32_strict, inject_fault, strict_limits);
  } catch (const fl::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const fl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const fl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
