#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "covgroup/catalog.hpp"
#include "covgroup/covers.hpp"

namespace covgroup {

struct AnalysisOptions {
  std::size_t max_order = 64;
  EnumerationOptions enumeration;
  bool check_pnilp = true;
  bool check_bryce_serena = true;
  bool check_osclemma_quotients = true;
  /// Worker threads for corpus runs; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

struct LemmaCheck {
  std::string id;
  /// confirmed | vacuous | violated | error
  std::string status;
  std::string detail;

  friend bool operator==(const LemmaCheck&, const LemmaCheck&) = default;
};

struct ClassifySummary {
  bool one_sized = false;
  std::optional<std::string> family;
  std::optional<std::size_t> witness_h_order;
  std::optional<std::size_t> witness_c_order;

  friend bool operator==(const ClassifySummary&, const ClassifySummary&) = default;
};

struct VerificationReport {
  std::string group_name;
  std::size_t order = 0;
  bool is_cyclic = false;
  bool is_solvable = false;
  bool is_nilpotent = false;
  bool is_supersolvable = false;
  std::optional<std::size_t> lambda;
  std::optional<SigmaValue> sigma_exact;
  std::optional<SigmaValue> sigma_tomkinson;
  std::optional<std::vector<std::size_t>> irredundant_sizes;
  std::optional<bool> one_sized_bruteforce;
  std::optional<ClassifySummary> classify;
  /// one_sized_bruteforce == classify->one_sized; true for cyclic groups,
  /// false when either side could not be computed.
  bool agreement = false;
  std::vector<LemmaCheck> lemma_checks;
  std::vector<std::string> assumptions;
  std::vector<std::string> errors;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct CorpusSummary {
  std::size_t groups = 0;
  std::size_t non_cyclic = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t errors = 0;
  std::size_t lemma_violations = 0;

  friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};

struct CorpusResult {
  /// Sorted by group name.
  std::vector<VerificationReport> reports;
  CorpusSummary summary;

  friend bool operator==(const CorpusResult&, const CorpusResult&) = default;
};

/// Failures are recorded in `errors` / lemma check statuses, never thrown.
VerificationReport run_analyze(const Group& g, const AnalysisOptions& options);
VerificationReport run_analyze(const CatalogEntry& entry, GroupBuilder& builder, const AnalysisOptions& options);

/// Analyses every entry (in parallel when options.jobs != 1) and merges the
/// reports in name order.
CorpusResult run_verify_corpus(const std::vector<CatalogEntry>& catalog, const AnalysisOptions& options);

/// Compact when indent < 0.
std::string to_json(const VerificationReport& report, int indent = -1);
std::string to_json(const CorpusResult& result, int indent = -1);
/// Throws ParseError on malformed input.
VerificationReport report_from_json(const std::string& text);
CorpusResult corpus_from_json(const std::string& text);

}  // namespace covgroup
