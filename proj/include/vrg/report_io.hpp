#pragma once

#include <json.hpp>
#include <string>

#include "vrg/analyzer.hpp"
#include "vrg/extension_spec.hpp"
#include "vrg/fiber.hpp"

namespace vrg {

using Json = nlohmann::ordered_json;

/// Throws IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// {"variables": [{"name", "weight"}], "generators": [...], "labels": [...]}.
/// Throws InvalidSpec (or ParseError) on malformed documents.
ExtensionSpec spec_from_json(const Json& doc);
Json spec_to_json(const ExtensionSpec& spec);
ExtensionSpec load_spec(const std::string& path);

Json audit_to_json(const FiberAudit& audit);
Json report_to_json(const AnalysisReport& report, const ExtensionSpec& spec,
                    const FiberAudit* audit = nullptr);
/// Rebuilds the report; polynomials are re-parsed over the spec's rings.
AnalysisReport report_from_json(const Json& doc, const ExtensionSpec& spec);

/// Product form of p, e.g. "6*X*Y^2*(X^2 - Y^3)".
std::string factored(const Poly& p);

std::string format_spec(const ExtensionSpec& spec);
std::string format_report(const AnalysisReport& report, const ExtensionSpec& spec,
                          const FiberAudit* audit = nullptr);
std::string format_audit(const FiberAudit& audit);
std::string format_sample(const FiberSample& sample, int degree);

}  // namespace vrg
