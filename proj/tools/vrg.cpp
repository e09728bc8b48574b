#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <sstream>

#include "vrg/analyzer.hpp"
#include "vrg/errors.hpp"
#include "vrg/factor.hpp"
#include "vrg/fiber.hpp"
#include "vrg/jacobian.hpp"
#include "vrg/report_io.hpp"

namespace fs = std::filesystem;
using namespace vrg;

namespace {

enum Exit {
  kOk = 0,
  kIo = 1,
  kInvalidSpec = 2,
  kNotFinite = 3,
  kTheorem = 4,
  kDegreeCap = 5,
  kInternal = 6,
  kNotWellRamified = 10,
};

struct Options {
  std::string spec;
  std::string json;
  std::string batch;
  std::string report;
  std::string u;
  int fiber = 0;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  double residual_tol = 1e-6;
};

template <class Fn>
int guarded(const std::string& context, std::ostream& err, Fn&& fn) {
  auto fail = [&](int code, const std::exception& e) {
    err << "vrg: " << (context.empty() ? "" : context + ": ") << e.what() << "\n";
    return code;
  };
  try {
    return fn();
  } catch (const IoError& e) {
    return fail(kIo, e);
  } catch (const InvalidSpec& e) {
    return fail(kInvalidSpec, e);
  } catch (const ParseError& e) {
    return fail(kInvalidSpec, e);
  } catch (const DimensionExceeded& e) {
    return fail(kInvalidSpec, e);
  } catch (const NotFinite& e) {
    return fail(kNotFinite, e);
  } catch (const TheoremViolation& e) {
    return fail(kTheorem, e);
  } catch (const CharacterizationMismatch& e) {
    return fail(kTheorem, e);
  } catch (const ContractionNotPrincipal& e) {
    return fail(kTheorem, e);
  } catch (const DegreeCapExceeded& e) {
    return fail(kDegreeCap, e);
  } catch (const nlohmann::json::exception& e) {
    return fail(kInvalidSpec, e);
  } catch (const std::exception& e) {
    return fail(kInternal, e);
  }
}

FiberOptions fiber_options(const Options& o) { return {o.tol, o.residual_tol}; }

int analyze_one(const std::string& spec_path, const std::string& json_path, const Options& o,
                std::ostream& out) {
  ExtensionSpec spec = load_spec(spec_path);
  AnalysisReport report = analyze(spec);
  std::optional<FiberAudit> audit;
  if (o.fiber > 0) audit = branch_audit(spec, report, o.fiber, o.seed, fiber_options(o));
  out << format_report(report, spec, audit ? &*audit : nullptr);
  if (!json_path.empty())
    write_file(json_path, report_to_json(report, spec, audit ? &*audit : nullptr).dump(2) + "\n");
  return kOk;
}

int cmd_batch(const Options& o) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(o.batch, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) {
    std::cerr << "vrg: cannot read directory " << o.batch << "\n";
    return kIo;
  }
  std::sort(files.begin(), files.end());
  if (!o.json.empty()) fs::create_directories(o.json, ec);

  struct Outcome {
    int code;
    std::string text;
  };
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files) {
    jobs.push_back(std::async(std::launch::async, [f, &o] {
      std::ostringstream out, err;
      std::string json_path;
      if (!o.json.empty()) json_path = (fs::path(o.json) / (f.stem().string() + ".report.json")).string();
      int code = guarded(f.filename().string(), err, [&] { return analyze_one(f.string(), json_path, o, out); });
      return Outcome{code, err.str()};
    }));
  }
  int worst = kOk;
  for (std::size_t i = 0; i < files.size(); ++i) {
    Outcome r = jobs[i].get();
    std::cout << files[i].filename().string() << ": exit " << r.code << "\n";
    if (!r.text.empty()) std::cout << "  " << r.text;
    worst = std::max(worst, r.code);
  }
  return worst;
}

int cmd_jacobian(const Options& o) {
  ExtensionSpec spec = load_spec(o.spec);
  Poly J = jacobian(spec.generators());
  if (J.is_zero()) {
    std::cout << "jacobian: 0\n";
    return kOk;
  }
  Factorization f = factor(J);
  std::cout << "jacobian: " << f.to_string() << "\n";
  std::cout << "unit: " << to_string(f.unit) << "\n";
  std::cout << "canonical: " << to_string(canonical_associate(J)) << "\n";
  return kOk;
}

int cmd_wellramified(const Options& o) {
  ExtensionSpec spec = load_spec(o.spec);
  AnalysisReport report = analyze(spec);
  if (report.well_ramified) {
    std::cout << "yes\n";
    std::cout << "D_tilde: " << factored(*report.witness_representation) << "\n";
    return kOk;
  }
  std::cout << "no\n";
  std::cout << "witness prime: " << to_string(*report.witness_prime) << "\n";
  return kNotWellRamified;
}

std::vector<Rat> parse_point(const std::string& text, std::size_t n) {
  std::vector<Rat> u;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    try {
      u.push_back(parse_rational(item));
    } catch (const std::exception&) {
      throw InvalidSpec("--u: '" + item + "' is not a rational number (only rational points are supported)");
    }
  }
  if (u.size() != n)
    throw InvalidSpec("--u: expected " + std::to_string(n) + " coordinates, got " + std::to_string(u.size()));
  return u;
}

int cmd_fiber(const Options& o) {
  ExtensionSpec spec = load_spec(o.spec);
  if (spec.n() > 3) throw DimensionExceeded("dimension exceeded: fiber sampling supports n <= 3");
  AnalysisReport report = analyze(spec);
  if (!o.u.empty()) {
    FiberSample s = fiber_count(spec, parse_point(o.u, spec.n()), fiber_options(o), report.contractions());
    std::cout << format_sample(s, report.degree);
    if (!o.json.empty()) {
      Json doc = {{"u", o.u},
                  {"count", s.count},
                  {"degree", report.degree},
                  {"classification", to_string(s.classification)},
                  {"residual", s.residual}};
      write_file(o.json, doc.dump(2) + "\n");
    }
    return kOk;
  }
  FiberAudit audit = branch_audit(spec, report, o.fiber > 0 ? o.fiber : 20, o.seed, fiber_options(o));
  std::cout << format_audit(audit);
  if (!o.json.empty()) write_file(o.json, audit_to_json(audit).dump(2) + "\n");
  return audit.passed() ? kOk : kTheorem;
}

int cmd_verify(const Options& o) {
  ExtensionSpec spec = load_spec(o.spec);
  Json doc;
  try {
    doc = Json::parse(read_file(o.report));
  } catch (const Json::parse_error& e) {
    throw InvalidSpec(o.report + ": " + e.what());
  }
  AnalysisReport report = report_from_json(doc, spec);
  auto failed = verify_report(report, spec);
  if (failed.empty()) {
    std::cout << "report verified\n";
    return kOk;
  }
  for (const auto& f : failed) std::cout << "failed check: " << f << "\n";
  return kTheorem;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramification analysis of finite graded polynomial extensions"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report: degree, jacobian, ramification, discriminant");
  analyze_cmd->add_option("SPEC", o.spec, "spec JSON file");
  analyze_cmd->add_option("--json", o.json, "write the JSON report here (a directory with --batch)");
  analyze_cmd->add_option("--fiber", o.fiber, "append a fiber audit with N samples per locus");
  analyze_cmd->add_option("--seed", o.seed, "seed for fiber sampling");
  analyze_cmd->add_option("--tol", o.tol, "clustering tolerance");
  analyze_cmd->add_option("--residual-tol", o.residual_tol, "residual tolerance");
  analyze_cmd->add_option("--batch", o.batch, "analyze every .json spec in a directory");

  auto* jac_cmd = app.add_subcommand("jacobian", "factored jacobian with its unit");
  jac_cmd->add_option("SPEC", o.spec, "spec JSON file")->required();

  auto* wr_cmd = app.add_subcommand("wellramified", "prints yes (exit 0) or no (exit 10)");
  wr_cmd->add_option("SPEC", o.spec, "spec JSON file")->required();

  auto* fiber_cmd = app.add_subcommand("fiber", "fiber size over a point, or a sampled audit");
  fiber_cmd->add_option("SPEC", o.spec, "spec JSON file")->required();
  fiber_cmd->add_option("--u", o.u, "comma-separated rational base point");
  fiber_cmd->add_option("--fiber", o.fiber, "samples per locus when --u is absent");
  fiber_cmd->add_option("--seed", o.seed, "seed for sampling");
  fiber_cmd->add_option("--tol", o.tol, "clustering tolerance");
  fiber_cmd->add_option("--residual-tol", o.residual_tol, "residual tolerance");
  fiber_cmd->add_option("--json", o.json, "write the result as JSON");

  auto* verify_cmd = app.add_subcommand("verify", "re-check a stored JSON report against its spec");
  verify_cmd->add_option("SPEC", o.spec, "spec JSON file")->required();
  verify_cmd->add_option("REPORT", o.report, "report JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  if (analyze_cmd->parsed()) {
    if (!o.batch.empty()) return cmd_batch(o);
    if (o.spec.empty()) {
      std::cerr << "vrg: analyze needs SPEC or --batch DIR\n";
      return kInvalidSpec;
    }
    return guarded("", std::cerr, [&] { return analyze_one(o.spec, o.json, o, std::cout); });
  }
  if (jac_cmd->parsed()) return guarded("", std::cerr, [&] { return cmd_jacobian(o); });
  if (wr_cmd->parsed()) return guarded("", std::cerr, [&] { return cmd_wellramified(o); });
  if (fiber_cmd->parsed()) return guarded("", std::cerr, [&] { return cmd_fiber(o); });
  if (verify_cmd->parsed()) return guarded("", std::cerr, [&] { return cmd_verify(o); });
  return kOk;
}
