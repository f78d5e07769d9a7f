#include "covgroup/report.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <json.hpp>

#include "covgroup/classification.hpp"
#include "covgroup/error.hpp"
#include "covgroup/lattice.hpp"

namespace covgroup {

namespace {

using json = nlohmann::ordered_json;

template <typename F>
void attempt(VerificationReport& r, const char* stage, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    r.errors.push_back(std::string(stage) + ": " + e.what());
  }
}

void add_check(VerificationReport& r, std::string id, CheckStatus status, std::string detail) {
  r.lemma_checks.push_back(LemmaCheck{std::move(id), to_string(status), std::move(detail)});
}

template <typename F>
void lemma(VerificationReport& r, const std::string& id, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    r.lemma_checks.push_back(LemmaCheck{id, "error", e.what()});
    r.errors.push_back(id + ": " + e.what());
  }
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

VerificationReport run_analyze(const Group& g, const AnalysisOptions& options) {
  VerificationReport r;
  r.group_name = g.name();
  r.order = g.order();

  std::optional<Lattice> lattice;
  attempt(r, "lattice", [&] { lattice.emplace(g, options.max_order); });
  if (!lattice) return r;
  const Lattice& L = *lattice;

  r.is_cyclic = is_cyclic(g);
  r.is_solvable = is_solvable(g);
  r.is_nilpotent = is_nilpotent(L);
  r.is_supersolvable = is_supersolvable(L);
  attempt(r, "sigma_exact", [&] { r.sigma_exact = sigma_exact(L); });
  if (r.is_cyclic) {
    r.agreement = true;
    return r;
  }

  attempt(r, "lambda", [&] { r.lambda = lambda(L); });
  if (r.is_solvable) {
    attempt(r, "sigma_tomkinson", [&] {
      r.sigma_tomkinson = sigma_tomkinson(L);
      r.assumptions.push_back("chief-factor complements are counted as distinct subgroups, not up to conjugacy");
      if (r.sigma_exact && *r.sigma_tomkinson != *r.sigma_exact)
        throw Error(ErrorCode::ConsistencyViolation, "Tomkinson value " + r.sigma_tomkinson->to_string() +
                                                         " differs from exact sigma " + r.sigma_exact->to_string());
    });
  }

  attempt(r, "one_sized_bruteforce", [&] {
    const auto ev = one_sized_evidence(L, options.enumeration);
    r.one_sized_bruteforce = ev.one_sized;
    if (ev.irredundant_sizes)
      r.irredundant_sizes = std::vector<std::size_t>(ev.irredundant_sizes->begin(), ev.irredundant_sizes->end());
  });

  attempt(r, "classify", [&] {
    const auto outcome = classify(L);
    if (!outcome_is_consistent(L, outcome))
      throw Error(ErrorCode::ConsistencyViolation, "classification witness fails its invariants");
    ClassifySummary s;
    s.one_sized = outcome.one_sized;
    if (outcome.family) s.family = outcome.family->to_string();
    if (outcome.witness_h) s.witness_h_order = outcome.witness_h->order;
    if (outcome.witness_c) s.witness_c_order = outcome.witness_c->order;
    r.classify = s;
  });
  r.agreement = r.classify && r.one_sized_bruteforce && r.classify->one_sized == *r.one_sized_bruteforce;

  if (options.check_pnilp && r.is_solvable) {
    for (auto p : prime_divisors(g.order())) {
      const std::string id = "lemma-pnilp(p=" + std::to_string(p) + ")";
      lemma(r, id, [&] {
        const auto rec = check_lemma_pnilp(L, p);
        add_check(r, id, rec.status, "hypothesis=" + flag(rec.hypothesis) + " conclusion=" + flag(rec.conclusion));
      });
    }
  }
  if (options.check_bryce_serena) {
    lemma(r, "bryce-serena", [&] {
      const auto rec = check_bryce_serena(L);
      add_check(r, "bryce-serena", rec.status,
                "sigma=" + std::to_string(rec.sigma) + " abelianCover=" +
                    (rec.abelian_cover_size ? std::to_string(*rec.abelian_cover_size) : "none") +
                    " solvable=" + flag(rec.solvable));
    });
  }
  if (options.check_osclemma_quotients) {
    const bool one_sized = r.lambda && r.sigma_exact && *r.lambda == r.sigma_exact->value();
    if (!one_sized) {
      add_check(r, "osclemma-quotients", CheckStatus::Vacuous, "group is not one-sized");
      add_check(r, "osclemma-two-generation", CheckStatus::Vacuous, "group is not one-sized");
    } else {
      lemma(r, "osclemma-quotients", [&] {
        const auto rec = check_osclemma_quotients(L);
        add_check(r, "osclemma-quotients", rec.status, "nonCyclicQuotients=" + std::to_string(rec.checks.size()));
      });
      lemma(r, "osclemma-two-generation", [&] {
        const auto rec = check_two_generation(L);
        add_check(r, "osclemma-two-generation", rec.status,
                  "pairs=" + std::to_string(rec.pairs_checked) + " failing=" + std::to_string(rec.pairs_failing));
      });
    }
  }
  return r;
}

VerificationReport run_analyze(const CatalogEntry& entry, GroupBuilder& builder, const AnalysisOptions& options) {
  try {
    return run_analyze(builder.build(entry.name), options);
  } catch (const std::exception& e) {
    VerificationReport r;
    r.group_name = entry.name;
    r.errors.push_back(std::string("construct: ") + e.what());
    return r;
  }
}

CorpusResult run_verify_corpus(const std::vector<CatalogEntry>& catalog, const AnalysisOptions& options) {
  GroupBuilder builder(catalog, options.max_order);
  std::vector<std::optional<Group>> groups(catalog.size());
  std::vector<VerificationReport> reports(catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    try {
      groups[i] = builder.build(catalog[i].name);
    } catch (const std::exception& e) {
      reports[i].group_name = catalog[i].name;
      reports[i].errors.push_back(std::string("construct: ") + e.what());
    }
  }

  unsigned jobs = options.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.jobs;
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(catalog.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++)
      if (groups[i]) reports[i] = run_analyze(*groups[i], options);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }

  std::sort(reports.begin(), reports.end(),
            [](const VerificationReport& a, const VerificationReport& b) { return a.group_name < b.group_name; });

  CorpusResult result;
  result.summary.groups = reports.size();
  for (const auto& r : reports) {
    if (r.order > 0 && !r.is_cyclic) ++result.summary.non_cyclic;
    if (!r.errors.empty()) ++result.summary.errors;
    if (r.classify && r.one_sized_bruteforce) {
      if (r.agreement)
        ++result.summary.agreements;
      else
        ++result.summary.disagreements;
    }
    for (const auto& c : r.lemma_checks)
      if (c.status == "violated") ++result.summary.lemma_violations;
  }
  result.reports = std::move(reports);
  return result;
}

// --- JSON ---------------------------------------------------------------------

namespace {

json sigma_json(const std::optional<SigmaValue>& s) {
  if (!s) return nullptr;
  if (s->is_infinite()) return "infinite";
  return s->value();
}

std::optional<SigmaValue> sigma_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_string()) {
    if (j.get<std::string>() != "infinite") throw Error(ErrorCode::ParseError, "bad sigma value");
    return SigmaValue::infinite();
  }
  return SigmaValue::finite(j.get<std::size_t>());
}

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json report_json(const VerificationReport& r) {
  json j;
  j["groupName"] = r.group_name;
  j["order"] = r.order;
  j["isCyclic"] = r.is_cyclic;
  j["isSolvable"] = r.is_solvable;
  j["isNilpotent"] = r.is_nilpotent;
  j["isSupersolvable"] = r.is_supersolvable;
  j["lambda"] = opt(r.lambda);
  j["sigmaExact"] = sigma_json(r.sigma_exact);
  j["sigmaTomkinson"] = sigma_json(r.sigma_tomkinson);
  j["irredundantSizes"] = opt(r.irredundant_sizes);
  j["oneSizedBruteforce"] = opt(r.one_sized_bruteforce);
  if (r.classify) {
    json c;
    c["oneSized"] = r.classify->one_sized;
    c["family"] = opt(r.classify->family);
    c["witnessHOrder"] = opt(r.classify->witness_h_order);
    c["witnessCOrder"] = opt(r.classify->witness_c_order);
    j["classifyOutcome"] = c;
  } else {
    j["classifyOutcome"] = nullptr;
  }
  j["agreement"] = r.agreement;
  json checks = json::array();
  for (const auto& c : r.lemma_checks) checks.push_back({{"id", c.id}, {"status", c.status}, {"detail", c.detail}});
  j["lemmaChecks"] = checks;
  j["assumptions"] = r.assumptions;
  j["errors"] = r.errors;
  return j;
}

VerificationReport report_from(const json& j) {
  VerificationReport r;
  r.group_name = j.at("groupName").get<std::string>();
  r.order = j.at("order").get<std::size_t>();
  r.is_cyclic = j.at("isCyclic").get<bool>();
  r.is_solvable = j.at("isSolvable").get<bool>();
  r.is_nilpotent = j.at("isNilpotent").get<bool>();
  r.is_supersolvable = j.at("isSupersolvable").get<bool>();
  r.lambda = opt_from<std::size_t>(j.at("lambda"));
  r.sigma_exact = sigma_from(j.at("sigmaExact"));
  r.sigma_tomkinson = sigma_from(j.at("sigmaTomkinson"));
  r.irredundant_sizes = opt_from<std::vector<std::size_t>>(j.at("irredundantSizes"));
  r.one_sized_bruteforce = opt_from<bool>(j.at("oneSizedBruteforce"));
  if (const auto& c = j.at("classifyOutcome"); !c.is_null()) {
    ClassifySummary s;
    s.one_sized = c.at("oneSized").get<bool>();
    s.family = opt_from<std::string>(c.at("family"));
    s.witness_h_order = opt_from<std::size_t>(c.at("witnessHOrder"));
    s.witness_c_order = opt_from<std::size_t>(c.at("witnessCOrder"));
    r.classify = s;
  }
  r.agreement = j.at("agreement").get<bool>();
  for (const auto& c : j.at("lemmaChecks"))
    r.lemma_checks.push_back(LemmaCheck{c.at("id").get<std::string>(), c.at("status").get<std::string>(),
                                        c.at("detail").get<std::string>()});
  r.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  r.errors = j.at("errors").get<std::vector<std::string>>();
  return r;
}

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

template <typename F>
auto wrap_json(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

std::string to_json(const VerificationReport& report, int indent) { return report_json(report).dump(indent); }

std::string to_json(const CorpusResult& result, int indent) {
  json j;
  json reports = json::array();
  for (const auto& r : result.reports) reports.push_back(report_json(r));
  j["reports"] = reports;
  const auto& s = result.summary;
  j["summary"] = {{"groups", s.groups},
                  {"nonCyclic", s.non_cyclic},
                  {"agreements", s.agreements},
                  {"disagreements", s.disagreements},
                  {"errors", s.errors},
                  {"lemmaViolations", s.lemma_violations}};
  return j.dump(indent);
}

VerificationReport report_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  return wrap_json([&] { return report_from(j); });
}

CorpusResult corpus_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  return wrap_json([&] {
    CorpusResult result;
    for (const auto& r : j.at("reports")) result.reports.push_back(report_from(r));
    const auto& s = j.at("summary");
    result.summary.groups = s.at("groups").get<std::size_t>();
    result.summary.non_cyclic = s.at("nonCyclic").get<std::size_t>();
    result.summary.agreements = s.at("agreements").get<std::size_t>();
    result.summary.disagreements = s.at("disagreements").get<std::size_t>();
    result.summary.errors = s.at("errors").get<std::size_t>();
    result.summary.lemma_violations = s.at("lemmaViolations").get<std::size_t>();
    return result;
  });
}

}  // namespace covgroup
