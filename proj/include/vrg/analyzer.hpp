#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vrg/extension_spec.hpp"
#include "vrg/factor.hpp"
#include "vrg/groebner.hpp"

namespace vrg {

/// Throws NotFinite unless the extension is finite; returns the degree
/// r = prod a_i / prod b_j.
int validate(const ExtensionSpec& spec, const GroebnerOptions& options = {});

struct RamificationDatum {
  Poly Q;
  int jac_multiplicity;
  Poly contraction;  // tag ring
  int index;
};

struct PullbackFactor {
  Poly factor;
  int multiplicity;
  bool ramified;  // multiplicity >= 2
};

/// Factorization of P(f) for one contraction P.
struct ContractionPullback {
  Poly contraction;
  Rat unit;
  std::vector<PullbackFactor> factors;

  bool mixed() const;  // has both ramified and unramified factors
};

struct WellRamifiedVerdict {
  bool verdict;
  bool by_membership;
  bool by_factor_pattern;
  std::optional<Poly> representation;        // of R, when it lies in A
  std::optional<ContractionPullback> failing;  // first contraction with an unramified factor
};

struct Discriminant {
  Poly D;
  Poly D_rep;
};

struct AnalysisReport {
  int degree;
  Poly jacobian;
  Rat discarded_unit;
  std::vector<RamificationDatum> ramification;
  Poly S;
  Poly R;
  Poly S_tilde;
  bool well_ramified;
  bool by_membership;
  bool by_factor_pattern;
  std::optional<Poly> witness_representation;
  std::optional<Poly> witness_prime;
  std::vector<ContractionPullback> pullbacks;
  std::optional<Discriminant> discriminant;
  std::optional<Poly> quotient_DJ;
  std::vector<std::string> warnings;

  /// Distinct contractions in order of first appearance.
  std::vector<Poly> contractions() const;
};

AnalysisReport analyze(const ExtensionSpec& spec, const GroebnerOptions& options = {});

/// Both characterizations for given ramification data. Throws
/// CharacterizationMismatch when they disagree.
WellRamifiedVerdict is_well_ramified(const ExtensionSpec& spec,
                                     const std::vector<RamificationDatum>& ramification,
                                     const GroebnerOptions& options = {});

/// Recomputes every claim of the report from the spec; returns the names of
/// the checks that failed (empty when the report is sound).
std::vector<std::string> verify_report(const AnalysisReport& report, const ExtensionSpec& spec,
                                       const GroebnerOptions& options = {});

}  // namespace vrg
