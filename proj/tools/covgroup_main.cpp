// covgroup: cover invariants and one-sized-cover classification for catalog
// groups. See README.md for the catalog format and subcommands.

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covgroup/catalog.hpp"
#include "covgroup/classification.hpp"
#include "covgroup/covers.hpp"
#include "covgroup/error.hpp"
#include "covgroup/lattice.hpp"
#include "covgroup/report.hpp"

namespace {

using namespace covgroup;

struct GlobalFlags {
  bool json = false;
  std::size_t max_order = 64;
  std::size_t enum_bound = 32;
  std::vector<std::string> checks{"lemma-pnilp", "bryce-serena", "osclemma-quotients"};
  unsigned jobs = 0;
};

struct Selection {
  std::string catalog;
  std::string group;
};

AnalysisOptions analysis_options(const GlobalFlags& flags) {
  AnalysisOptions o;
  o.max_order = flags.max_order;
  o.enumeration.order_bound = flags.enum_bound;
  o.jobs = flags.jobs;
  o.check_pnilp = o.check_bryce_serena = o.check_osclemma_quotients = false;
  for (const auto& c : flags.checks) {
    if (c == "lemma-pnilp")
      o.check_pnilp = true;
    else if (c == "bryce-serena")
      o.check_bryce_serena = true;
    else if (c == "osclemma-quotients")
      o.check_osclemma_quotients = true;
    else if (c != "none")
      throw Error(ErrorCode::InvalidParameters, "unknown check '" + c + "'");
  }
  return o;
}

/// Entries selected by --group (all entries when empty).
std::vector<CatalogEntry> selected(const std::vector<CatalogEntry>& entries, const std::string& name) {
  if (name.empty()) return entries;
  for (const auto& e : entries)
    if (e.name == name) return {e};
  throw Error(ErrorCode::UnknownGroup, "no group named '" + name + "' in catalog");
}

template <typename RowFn>
int for_each_group(const Selection& sel, const GlobalFlags& flags, RowFn&& row) {
  const auto entries = parse_catalog_file(sel.catalog);
  GroupBuilder builder(entries, flags.max_order);
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& entry : selected(entries, sel.group)) {
    nlohmann::ordered_json j;
    j["groupName"] = entry.name;
    try {
      const Group& g = builder.build(entry.name);
      Lattice lattice(g, flags.max_order);
      j["order"] = g.order();
      row(lattice, j);
    } catch (const std::exception& e) {
      j["error"] = e.what();
    }
    if (flags.json) {
      out.push_back(j);
    } else {
      std::cout << entry.name;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "groupName") continue;
        std::cout << "  " << it.key() << '=' << (it->is_string() ? it->get<std::string>() : it->dump());
      }
      std::cout << '\n';
    }
  }
  if (flags.json) std::cout << out.dump(2) << '\n';
  return 0;
}

void print_report_text(const VerificationReport& r) {
  std::cout << r.group_name << "  order=" << r.order;
  if (r.is_cyclic) {
    std::cout << "  cyclic  sigma=infinite\n";
  } else {
    std::cout << "  lambda=" << (r.lambda ? std::to_string(*r.lambda) : "?")
              << "  sigma=" << (r.sigma_exact ? r.sigma_exact->to_string() : "?");
    if (r.sigma_tomkinson) std::cout << "  tomkinson=" << r.sigma_tomkinson->to_string();
    if (r.one_sized_bruteforce) std::cout << "  oneSized=" << (*r.one_sized_bruteforce ? "yes" : "no");
    if (r.classify && r.classify->family) std::cout << "  family=" << *r.classify->family;
    std::cout << "  agreement=" << (r.agreement ? "yes" : "NO") << '\n';
  }
  for (const auto& c : r.lemma_checks)
    if (c.status == "violated" || c.status == "error") std::cout << "    " << c.id << ": " << c.status << ' ' << c.detail << '\n';
  for (const auto& e : r.errors) std::cout << "    error: " << e << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cover invariants (lambda, sigma, irredundant covers) and one-sized-cover classification"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Machine-readable JSON output");
  app.add_option("--max-order", flags.max_order, "Largest group order accepted")->capture_default_str();
  app.add_option("--enum-bound", flags.enum_bound, "Largest order for irredundant-cover enumeration")
      ->capture_default_str();
  app.add_option("--checks", flags.checks, "Lemma checks: lemma-pnilp,bryce-serena,osclemma-quotients (or none)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--jobs", flags.jobs, "Worker threads for verify-corpus (0 = all cores)")->capture_default_str();

  auto add_selection = [](CLI::App* cmd, Selection& sel) {
    cmd->fallthrough();
    cmd->add_option("catalog", sel.catalog, "Catalog file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--group", sel.group, "Only this catalog entry");
  };

  Selection analyze_sel, sigma_sel, lambda_sel, covers_sel, classify_sel, corpus_sel;
  auto* analyze = app.add_subcommand("analyze", "Full verification report per group");
  add_selection(analyze, analyze_sel);
  auto* sigma = app.add_subcommand("sigma", "Minimal cover size (exact, and Tomkinson's formula when solvable)");
  add_selection(sigma, sigma_sel);
  auto* lambda_cmd = app.add_subcommand("lambda", "Number of maximal cyclic subgroups");
  add_selection(lambda_cmd, lambda_sel);
  auto* covers = app.add_subcommand("covers", "Irredundant covers");
  add_selection(covers, covers_sel);
  bool enumerate = false;
  std::optional<std::size_t> cap;
  covers->add_flag("--enumerate", enumerate, "List every irredundant cover")->required();
  covers->add_option("--cap", cap, "Only covers with at most K members");
  auto* classify_cmd = app.add_subcommand("classify", "Structural one-sized classification");
  add_selection(classify_cmd, classify_sel);
  auto* corpus = app.add_subcommand("verify-corpus", "Verify every catalog group; exit 1 on any disagreement");
  corpus->fallthrough();
  corpus->add_option("catalog", corpus_sel.catalog, "Catalog file")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    const AnalysisOptions options = analysis_options(flags);

    if (*analyze) {
      const auto entries = parse_catalog_file(analyze_sel.catalog);
      GroupBuilder builder(entries, flags.max_order);
      std::vector<VerificationReport> reports;
      for (const auto& e : selected(entries, analyze_sel.group)) reports.push_back(run_analyze(e, builder, options));
      if (flags.json) {
        std::cout << '[';
        for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "," : "") << to_json(reports[i], 2);
        std::cout << "]\n";
      } else {
        for (const auto& r : reports) print_report_text(r);
      }
      return 0;
    }

    if (*sigma) {
      return for_each_group(sigma_sel, flags, [](const Lattice& L, auto& j) {
        j["sigmaExact"] = sigma_exact(L).to_string();
        if (is_solvable(L.group())) {
          try {
            j["sigmaTomkinson"] = sigma_tomkinson(L).to_string();
          } catch (const Error& e) {
            j["sigmaTomkinson"] = std::string(e.what());
          }
        }
      });
    }

    if (*lambda_cmd) {
      return for_each_group(lambda_sel, flags, [](const Lattice& L, auto& j) { j["lambda"] = lambda(L); });
    }

    if (*covers) {
      EnumerationOptions eo = options.enumeration;
      eo.size_cap = cap;
      return for_each_group(covers_sel, flags, [&](const Lattice& L, auto& j) {
        const auto all = enumerate_irredundant_covers(L, eo);
        j["count"] = all.size();
        auto list = nlohmann::ordered_json::array();
        for (const auto& c : all) {
          auto members = nlohmann::ordered_json::array();
          for (const auto& m : c.members) members.push_back(m.members.elements());
          list.push_back(members);
        }
        std::set<std::size_t> sizes;
        for (const auto& c : all) sizes.insert(c.size());
        j["sizes"] = sizes;
        if (flags.json) j["covers"] = list;
      });
    }

    if (*classify_cmd) {
      return for_each_group(classify_sel, flags, [](const Lattice& L, auto& j) {
        const auto outcome = classify(L);
        j["oneSized"] = outcome.one_sized;
        if (outcome.one_sized) {
          j["family"] = outcome.family->to_string();
          j["witnessHOrder"] = outcome.witness_h->order;
          j["witnessCOrder"] = outcome.witness_c->order;
        }
      });
    }

    if (*corpus) {
      const auto entries = parse_catalog_file(corpus_sel.catalog);
      const auto result = run_verify_corpus(entries, options);
      if (flags.json) {
        std::cout << to_json(result, 2) << '\n';
      } else {
        for (const auto& r : result.reports) print_report_text(r);
        const auto& s = result.summary;
        std::cout << "groups=" << s.groups << " nonCyclic=" << s.non_cyclic << " agreements=" << s.agreements
                  << " disagreements=" << s.disagreements << " errors=" << s.errors
                  << " lemmaViolations=" << s.lemma_violations << '\n';
      }
      return result.summary.disagreements > 0 ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "covgroup: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
