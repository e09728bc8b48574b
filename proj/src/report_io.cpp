#include "vrg/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vrg/errors.hpp"
#include "vrg/factor.hpp"
#include "vrg/parse.hpp"

namespace vrg {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("cannot write " + path);
}

ExtensionSpec spec_from_json(const Json& doc) {
  if (!doc.is_object()) throw InvalidSpec("spec must be a JSON object");
  if (!doc.contains("variables") || !doc["variables"].is_array())
    throw InvalidSpec("spec needs a \"variables\" array");
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw InvalidSpec("spec needs a \"generators\" array");
  std::vector<std::string> names;
  std::vector<int> weights;
  for (const auto& v : doc["variables"]) {
    if (!v.is_object() || !v.contains("name") || !v["name"].is_string())
      throw InvalidSpec("each variable needs a string \"name\"");
    names.push_back(v["name"].get<std::string>());
    int w = 1;
    if (v.contains("weight")) {
      if (!v["weight"].is_number_integer()) throw InvalidSpec("weight must be a positive integer");
      w = v["weight"].get<int>();
    }
    weights.push_back(w);
  }
  std::vector<std::string> gens;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw InvalidSpec("generators must be expression strings");
    gens.push_back(g.get<std::string>());
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw InvalidSpec("labels must be an array of strings");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw InvalidSpec("labels must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  Ring ring;
  try {
    ring = make_ring(names, weights);
  } catch (const InvalidSpec&) {
    throw;
  } catch (const Error& e) {
    throw InvalidSpec(e.what());
  }
  std::vector<Poly> polys;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      polys.push_back(parse(gens[i], ring));
    } catch (const ParseError& e) {
      throw InvalidSpec("generator " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return ExtensionSpec(ring, std::move(polys), std::move(labels));
}

Json spec_to_json(const ExtensionSpec& spec) {
  Json doc;
  Json vars = Json::array();
  for (std::size_t j = 0; j < spec.n(); ++j)
    vars.push_back({{"name", spec.ring()->name(j)}, {"weight", spec.ring()->weight(j)}});
  doc["variables"] = vars;
  Json gens = Json::array();
  for (const auto& g : spec.generators()) gens.push_back(to_string(g));
  doc["generators"] = gens;
  if (!spec.labels().empty()) doc["labels"] = spec.labels();
  return doc;
}

ExtensionSpec load_spec(const std::string& path) {
  std::string text = read_file(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidSpec(path + ": " + e.what());
  }
  return spec_from_json(doc);
}

std::string factored(const Poly& p) {
  if (p.is_zero()) return "0";
  if (p.is_constant()) return to_string(p);
  return factor(p).to_string();
}

namespace {

std::string number(double x) {
  if (x == 0) x = 0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string complex_string(std::complex<double> z) {
  double re = z.real(), im = z.imag();
  if (std::abs(im) <= 1e-12 * std::max(1.0, std::abs(re))) return number(re);
  if (std::abs(re) <= 1e-12 * std::abs(im)) return number(im) + "i";
  return number(re) + (im < 0 ? "-" : "+") + number(std::abs(im)) + "i";
}

std::string point_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + complex_string(p[i]);
  return s + ")";
}

Json pullback_json(const ContractionPullback& pb) {
  Json factors = Json::array();
  for (const auto& f : pb.factors)
    factors.push_back(
        {{"factor", to_string(f.factor)}, {"multiplicity", f.multiplicity}, {"ramified", f.ramified}});
  return {{"contraction", to_string(pb.contraction)},
          {"unit", to_string(pb.unit)},
          {"factors", factors}};
}

std::string require_string(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string())
    throw Error(std::string("report: missing string field \"") + key + "\"");
  return doc[key].get<std::string>();
}

int require_int(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    throw Error(std::string("report: missing integer field \"") + key + "\"");
  return doc[key].get<int>();
}

bool require_bool(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_boolean())
    throw Error(std::string("report: missing boolean field \"") + key + "\"");
  return doc[key].get<bool>();
}

}  // namespace

Json audit_to_json(const FiberAudit& audit) {
  Json loci = Json::array();
  for (const auto& l : audit.loci)
    loci.push_back({{"contraction", to_string(l.contraction)},
                    {"sampled", l.sampled},
                    {"below_r", l.below_r},
                    {"indeterminate", l.indeterminate}});
  Json records = Json::array();
  for (const auto& s : audit.records) {
    Json rec = {{"u", point_string(s.u)},
                {"count", s.count},
                {"classification", to_string(s.classification)},
                {"residual", s.residual}};
    if (s.branch_index) rec["branch_index"] = *s.branch_index;
    records.push_back(rec);
  }
  return {{"seed", audit.seed},
          {"samples", audit.samples},
          {"degree", audit.degree},
          {"cluster_tol", audit.cluster_tol},
          {"residual_tol", audit.residual_tol},
          {"generic", {{"sampled", audit.generic_sampled},
                       {"equal_r", audit.generic_equal_r},
                       {"indeterminate", audit.generic_indeterminate}}},
          {"loci", loci},
          {"max_count", audit.max_count},
          {"violations", audit.violations},
          {"passed", audit.passed()},
          {"records", records}};
}

Json report_to_json(const AnalysisReport& report, const ExtensionSpec& spec,
                    const FiberAudit* audit) {
  Json doc;
  doc["spec"] = spec_to_json(spec);
  doc["tag_variables"] = spec.tag_ring()->names();
  doc["degree"] = report.degree;
  doc["jacobian"] = to_string(report.jacobian);
  doc["jacobian_factored"] = factored(report.jacobian);
  doc["discarded_unit"] = to_string(report.discarded_unit);
  Json ram = Json::array();
  for (const auto& d : report.ramification)
    ram.push_back({{"Q", to_string(d.Q)},
                   {"jac_multiplicity", d.jac_multiplicity},
                   {"e", d.index},
                   {"contraction", to_string(d.contraction)}});
  doc["ramification"] = ram;
  doc["S"] = to_string(report.S);
  doc["R"] = to_string(report.R);
  doc["S_tilde"] = to_string(report.S_tilde);
  doc["well_ramified"] = report.well_ramified;
  doc["characterizations"] = {{"by_membership", report.by_membership},
                              {"by_factor_pattern", report.by_factor_pattern}};
  if (report.witness_representation)
    doc["witness"] = {{"kind", "representation"}, {"D_rep", to_string(*report.witness_representation)}};
  else if (report.witness_prime)
    doc["witness"] = {{"kind", "failing_prime"}, {"prime", to_string(*report.witness_prime)}};
  else
    doc["witness"] = nullptr;
  Json pbs = Json::array();
  for (const auto& pb : report.pullbacks) pbs.push_back(pullback_json(pb));
  doc["pullbacks"] = pbs;
  if (report.discriminant)
    doc["discriminant"] = {{"D", to_string(report.discriminant->D)},
                           {"D_rep", to_string(report.discriminant->D_rep)}};
  else
    doc["discriminant"] = nullptr;
  if (!report.well_ramified)
    doc["candidate_discriminant"] = {{"label", "candidate discriminant (not in A)"},
                                     {"R", to_string(report.R)}};
  doc["quotient_DJ"] = report.quotient_DJ ? Json(to_string(*report.quotient_DJ)) : Json(nullptr);
  doc["fiber_audit"] = audit ? audit_to_json(*audit) : Json(nullptr);
  doc["warnings"] = report.warnings;
  return doc;
}

AnalysisReport report_from_json(const Json& doc, const ExtensionSpec& spec) {
  if (!doc.is_object()) throw Error("report must be a JSON object");
  const Ring& base = spec.ring();
  const Ring& tags = spec.tag_ring();
  auto base_poly = [&](const Json& d, const char* key) { return parse(require_string(d, key), base); };
  auto tag_poly = [&](const Json& d, const char* key) { return parse(require_string(d, key), tags); };

  std::vector<RamificationDatum> ram;
  if (!doc.contains("ramification") || !doc["ramification"].is_array())
    throw Error("report: missing \"ramification\" array");
  for (const auto& d : doc["ramification"])
    ram.push_back({base_poly(d, "Q"), require_int(d, "jac_multiplicity"), tag_poly(d, "contraction"),
                   require_int(d, "e")});

  AnalysisReport rep{require_int(doc, "degree"),
                     base_poly(doc, "jacobian"),
                     parse_rational(require_string(doc, "discarded_unit")),
                     ram,
                     base_poly(doc, "S"),
                     base_poly(doc, "R"),
                     tag_poly(doc, "S_tilde"),
                     require_bool(doc, "well_ramified"),
                     false,
                     false,
                     std::nullopt,
                     std::nullopt,
                     {},
                     std::nullopt,
                     std::nullopt,
                     {}};
  if (doc.contains("characterizations")) {
    rep.by_membership = require_bool(doc["characterizations"], "by_membership");
    rep.by_factor_pattern = require_bool(doc["characterizations"], "by_factor_pattern");
  }
  if (doc.contains("witness") && doc["witness"].is_object()) {
    const auto& w = doc["witness"];
    std::string kind = require_string(w, "kind");
    if (kind == "representation")
      rep.witness_representation = tag_poly(w, "D_rep");
    else if (kind == "failing_prime")
      rep.witness_prime = tag_poly(w, "prime");
    else
      throw Error("report: unknown witness kind " + kind);
  }
  if (doc.contains("pullbacks") && doc["pullbacks"].is_array()) {
    for (const auto& p : doc["pullbacks"]) {
      ContractionPullback pb{tag_poly(p, "contraction"), parse_rational(require_string(p, "unit")), {}};
      for (const auto& f : p.at("factors"))
        pb.factors.push_back({base_poly(f, "factor"), require_int(f, "multiplicity"),
                              require_bool(f, "ramified")});
      rep.pullbacks.push_back(std::move(pb));
    }
  }
  if (doc.contains("discriminant") && doc["discriminant"].is_object())
    rep.discriminant =
        Discriminant{base_poly(doc["discriminant"], "D"), tag_poly(doc["discriminant"], "D_rep")};
  if (doc.contains("quotient_DJ") && doc["quotient_DJ"].is_string())
    rep.quotient_DJ = base_poly(doc, "quotient_DJ");
  if (doc.contains("warnings") && doc["warnings"].is_array())
    for (const auto& w : doc["warnings"]) rep.warnings.push_back(w.get<std::string>());
  return rep;
}

std::string format_spec(const ExtensionSpec& spec) {
  std::ostringstream os;
  const VarTable& vars = *spec.ring();
  os << "f = (";
  for (std::size_t i = 0; i < spec.n(); ++i) os << (i ? ", " : "") << to_string(spec.generators()[i]);
  os << ") over Q[";
  for (std::size_t j = 0; j < vars.size(); ++j) os << (j ? ", " : "") << vars.name(j);
  os << "], weights (";
  for (std::size_t j = 0; j < vars.size(); ++j) os << (j ? ", " : "") << vars.weight(j);
  os << ")";
  return os.str();
}

std::string format_report(const AnalysisReport& report, const ExtensionSpec& spec,
                          const FiberAudit* audit) {
  std::ostringstream os;
  const VarTable& tags = *spec.tag_ring();
  os << "extension: " << format_spec(spec) << "\n";
  os << "tag variables:";
  for (std::size_t i = 0; i < spec.n(); ++i) {
    os << (i ? "," : "") << " " << tags.name(i) << " = " << to_string(spec.generators()[i])
       << " (weight " << tags.weight(i);
    if (!spec.labels().empty()) os << ", label " << spec.labels()[i];
    os << ")";
  }
  os << "\n";
  os << "degree r: " << report.degree << "\n";
  os << "jacobian: " << format_product(report.discarded_unit, factor(report.jacobian).factors) << "\n";
  os << "  canonical: " << to_string(report.jacobian) << "\n";
  os << "  discarded unit: " << to_string(report.discarded_unit) << "\n";
  os << "ramified primes:\n";
  if (report.ramification.empty()) os << "  (none)\n";
  for (const auto& d : report.ramification)
    os << "  " << to_string(d.Q) << "  e = " << d.index << "  exponent in J = " << d.jac_multiplicity
       << "  over " << to_string(d.contraction) << "\n";
  os << "S = " << factored(report.S) << "\n";
  os << "R = " << factored(report.R) << "\n";
  os << "S_tilde = " << factored(report.S_tilde) << "\n";
  os << "well-ramified: " << (report.well_ramified ? "yes" : "no") << "\n";
  os << "  by membership of R in A: " << (report.by_membership ? "yes" : "no")
     << "; by factor pattern: " << (report.by_factor_pattern ? "yes" : "no") << "\n";
  if (report.witness_prime) {
    os << "  witness prime: " << to_string(*report.witness_prime) << "\n";
    for (const auto& pb : report.pullbacks) {
      if (pb.contraction != *report.witness_prime) continue;
      os << "  pullback:";
      for (const auto& f : pb.factors)
        os << " " << format_product(Rat(1), {{f.factor, f.multiplicity}})
           << (f.ramified ? " (ramified)" : " (unramified)");
      os << "\n";
    }
  }
  if (report.discriminant) {
    os << "discriminant D = " << factored(report.discriminant->D) << "\n";
    os << "D_tilde = " << factored(report.discriminant->D_rep) << "\n";
  } else {
    os << "candidate discriminant (not in A): " << factored(report.R) << "\n";
  }
  if (report.quotient_DJ) os << "D/J = " << factored(*report.quotient_DJ) << "\n";
  for (const auto& w : report.warnings) os << "warning: " << w << "\n";
  if (audit) os << format_audit(*audit);
  return os.str();
}

std::string format_audit(const FiberAudit& audit) {
  std::ostringstream os;
  os << "fiber audit (seed " << audit.seed << ", " << audit.samples << " samples, r = " << audit.degree
     << ")\n";
  os << "  generic: " << audit.generic_equal_r << "/" << audit.generic_sampled << " have r points, "
     << audit.generic_indeterminate << " indeterminate\n";
  for (const auto& l : audit.loci)
    os << "  on Z(" << to_string(l.contraction) << "): " << l.below_r << "/" << l.sampled
       << " below r, " << l.indeterminate << " indeterminate\n";
  os << "  largest fiber: " << audit.max_count << "\n";
  os << "  violations: " << audit.violations.size() << "\n";
  for (const auto& v : audit.violations) os << "    " << v << "\n";
  return os.str();
}

std::string format_sample(const FiberSample& sample, int degree) {
  std::ostringstream os;
  os << "u = " << point_string(sample.u) << "\n";
  os << "count: " << sample.count << " (degree " << degree << ")\n";
  os << "classification: " << to_string(sample.classification);
  if (sample.branch_index) os << " (contraction " << *sample.branch_index + 1 << ")";
  os << "\n";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", sample.residual);
  os << "residual: " << buf << "\n";
  for (const auto& p : sample.points) os << "  " << point_string(p) << "\n";
  return os.str();
}

}  // namespace vrg
