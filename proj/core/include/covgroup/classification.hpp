#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "covgroup/covers.hpp"
#include "covgroup/lattice.hpp"

namespace covgroup {

/// The three shapes a one-sized factor H can take.
struct FamilyTag {
  enum class Kind { CpTimesCp, Q8, CpRtimesCn };

  Kind kind = Kind::Q8;
  std::size_t p = 0;
  std::size_t n = 0;

  static FamilyTag cp_times_cp(std::size_t p) { return {Kind::CpTimesCp, p, 0}; }
  static FamilyTag q8() { return {Kind::Q8, 2, 0}; }
  static FamilyTag cp_rtimes_cn(std::size_t p, std::size_t n) { return {Kind::CpRtimesCn, p, n}; }

  /// "CpTimesCp(3)", "Q8", "CpRtimesCn(3,2)".
  std::string to_string() const;
  static std::optional<FamilyTag> parse(const std::string& text);

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

struct ClassificationOutcome {
  bool one_sized = false;
  std::optional<Subgroup> witness_h;
  std::optional<Subgroup> witness_c;
  std::optional<FamilyTag> family;
};

/// Recognises H <= G by invariants: order p^2 abelian of exponent p; order 8
/// non-abelian with one involution; order p*n (p prime, p not dividing
/// n >= 2) non-abelian with a normal subgroup of order p and an element of
/// order n.
std::optional<FamilyTag> recognize_family(const Group& g, const ElementSet& h);

/// Searches normal pairs (H, C) with C cyclic, gcd(|H|, |C|) = 1 and
/// |H||C| = |G| for an H that recognize_family accepts. Pairs are tried with
/// H in canonical order; C may be trivial. Throws GroupIsCyclic.
ClassificationOutcome classify(const Lattice& lattice);

/// Re-checks the outcome invariants (coprime normal factors, C cyclic,
/// trivial intersection, orders multiply to |G|).
bool outcome_is_consistent(const Lattice& lattice, const ClassificationOutcome& outcome);

struct Theorem1Record {
  ClassificationOutcome outcome;
  OneSizedEvidence evidence;
  bool agreement = false;
};

Theorem1Record verify_theorem1(const Lattice& lattice, const EnumerationOptions& options = {});

enum class CheckStatus { Confirmed, Vacuous, Violated };
std::string to_string(CheckStatus status);

struct PnilpRecord {
  std::size_t prime = 0;
  bool hypothesis = false;
  bool conclusion = false;
  CheckStatus status = CheckStatus::Vacuous;
};

/// If every complemented chief factor of p-power order is central, G must
/// have a normal p-complement. Throws NotSolvable or PrimeDoesNotDivideOrder.
PnilpRecord check_lemma_pnilp(const Lattice& lattice, std::size_t p);

struct BryceSerenaRecord {
  std::size_t sigma = 0;
  /// Least size of a cover by abelian proper subgroups, if any exists.
  std::optional<std::size_t> abelian_cover_size;
  bool abelian_sigma_cover = false;
  bool solvable = false;
  CheckStatus status = CheckStatus::Vacuous;
};

/// A cover of size sigma(G) by abelian subgroups forces G solvable. Throws
/// GroupIsCyclic.
BryceSerenaRecord check_bryce_serena(const Lattice& lattice);

struct QuotientCheck {
  Subgroup kernel;
  std::size_t quotient_order = 0;
  std::size_t sigma = 0;
  std::size_t lambda = 0;
  bool holds = false;
};

struct OsclemmaQuotientRecord {
  std::size_t sigma = 0;
  std::vector<QuotientCheck> checks;
  CheckStatus status = CheckStatus::Vacuous;
};

/// For one-sized G: sigma(G/N) = sigma(G) = lambda(G/N) for every normal N
/// with G/N non-cyclic. Throws PreconditionViolation if G is not one-sized.
OsclemmaQuotientRecord check_osclemma_quotients(const Lattice& lattice);

struct TwoGenerationRecord {
  std::size_t pairs_checked = 0;
  std::size_t pairs_failing = 0;
  CheckStatus status = CheckStatus::Vacuous;
};

/// For one-sized G: any two distinct maximal cyclic subgroups generate G.
/// Throws PreconditionViolation if G is not one-sized.
TwoGenerationRecord check_two_generation(const Lattice& lattice);

struct OsclemmaCoverRecord {
  std::size_t lambda = 0;
  std::size_t sigma = 0;
  bool maximal_cyclic_family_irredundant = false;
  std::size_t covers_examined = 0;
  std::size_t covers_outside_range = 0;
  /// Covers where "size = lambda" and "each member holds exactly one maximal
  /// cyclic subgroup" disagree.
  std::size_t lambda_criterion_failures = 0;
  CheckStatus status = CheckStatus::Vacuous;
};

/// Enumerates irredundant covers and checks sigma <= |H| <= lambda together
/// with the exactly-one-maximal-cyclic characterisation of size-lambda covers.
OsclemmaCoverRecord check_osclemma_covers(const Lattice& lattice, const EnumerationOptions& options = {});

}  // namespace covgroup
