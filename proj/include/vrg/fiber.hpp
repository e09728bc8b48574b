#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vrg/analyzer.hpp"
#include "vrg/extension_spec.hpp"

namespace vrg {

struct FiberOptions {
  double cluster_tol = 1e-8;
  double residual_tol = 1e-6;
};

enum class FiberClass { generic, on_branch, indeterminate };
std::string to_string(FiberClass c);

using Point = std::vector<std::complex<double>>;

struct FiberSample {
  Point u;
  int count = 0;        // distinct numeric solutions after clustering
  int exact_count = 0;  // number of distinct solutions, from the radical
  FiberClass classification = FiberClass::indeterminate;
  std::optional<std::size_t> branch_index;  // which contraction vanishes at u
  double residual = 0;
  std::vector<Point> points;
};

/// Solutions of f(X) = u for rational u, n <= 3. `contractions` is used only
/// to name the branch component when the count drops below r.
FiberSample fiber_count(const ExtensionSpec& spec, const std::vector<Rat>& u,
                        const FiberOptions& options = {},
                        const std::vector<Poly>& contractions = {});

struct LocusAudit {
  Poly contraction;
  int sampled = 0;
  int below_r = 0;
  int indeterminate = 0;
};

struct FiberAudit {
  std::uint64_t seed = 0;
  int samples = 0;
  int degree = 0;
  double cluster_tol = 0;
  double residual_tol = 0;
  int generic_sampled = 0;
  int generic_equal_r = 0;
  int generic_indeterminate = 0;
  int max_count = 0;
  std::vector<LocusAudit> loci;
  std::vector<std::string> violations;
  std::vector<FiberSample> records;

  bool passed() const { return violations.empty(); }
};

/// Samples `samples` random generic points and `samples` points on each
/// branch hypersurface Z(P) of the report.
FiberAudit branch_audit(const ExtensionSpec& spec, const AnalysisReport& report, int samples,
                        std::uint64_t seed, const FiberOptions& options = {});

}  // namespace vrg
