// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "generators.hpp"
#include "vrg/analyzer.hpp"
#include "vrg/factor.hpp"
#include "vrg/fiber.hpp"
#include "vrg/ideal.hpp"
#include "vrg/parse.hpp"
#include "vrg/report_io.hpp"

using namespace vrg;
using testing::Rng;
using testing::uniform;

namespace {

ExtensionSpec corpus(const std::string& name) {
  return load_spec(std::string(VRG_DATA_DIR) + "/specs/" + name + ".json");
}

/// Collects failed expectations for one criterion.
struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Poly product_of_powers(const AnalysisReport& rep, const Ring& ring, int shift) {
  Poly p(ring, Rat(1));
  for (const auto& d : rep.ramification) p *= pow(d.Q, d.index + shift);
  return p;
}

void reference_one(Checker& c) {
  auto s = corpus("reference_1");
  auto rep = analyze(s);
  auto B = [&](const char* t) { return parse(t, s.ring()); };
  auto A = [&](const char* t) { return parse(t, s.tag_ring()); };
  c.expect(associated(rep.jacobian, B("X*Y^2*(X^2 - Y^3)")), "J");
  c.expect(rep.discarded_unit == 6, "unit 6");
  std::map<std::string, std::pair<int, std::string>> want{
      {"X", {2, "y2"}}, {"Y", {3, "y2"}}, {"X^2 - Y^3", {2, "y1^2 - 4*y2"}}};
  c.expect(rep.ramification.size() == want.size(), "three ramified primes");
  for (const auto& d : rep.ramification) {
    auto it = std::find_if(want.begin(), want.end(), [&](const auto& w) { return associated(d.Q, B(w.first.c_str())); });
    if (it == want.end()) {
      c.expect(false, "unexpected prime " + to_string(d.Q));
      continue;
    }
    c.expect(d.index == it->second.first, "e at " + it->first);
    c.expect(associated(d.contraction, A(it->second.second.c_str())), "contraction at " + it->first);
  }
  c.expect(rep.well_ramified, "well-ramified");
  c.expect(rep.discriminant && associated(rep.discriminant->D_rep, A("y2*(y1^2 - 4*y2)")), "D_tilde");
  c.expect(rep.quotient_DJ && associated(*rep.quotient_DJ, B("X*Y*(X^2 - Y^3)")), "D/J");
}

void reference_two(Checker& c) {
  auto s = corpus("reference_2");
  auto rep = analyze(s);
  auto B = [&](const char* t) { return parse(t, s.ring()); };
  c.expect(rep.degree == 4, "r = 4");
  c.expect(associated(rep.jacobian, B("X*(Y - X^2)")), "J");
  c.expect(!rep.well_ramified, "not well-ramified");
  c.expect(rep.witness_prime && associated(*rep.witness_prime, parse("y1", s.tag_ring())), "witness y1");
  c.expect(associated(s.pullback(rep.S_tilde), B("X^2*Y*(Y - X^2)^2")), "S_tilde pullback");
}

const std::vector<std::string> kCorpus{"reference_1", "reference_2", "symmetric_2", "symmetric_3",
                                       "dihedral_3",  "dihedral_4",  "dihedral_5",  "monomial_2_3",
                                       "monomial_4_2_3", "cyclic_5", "mixed_5_2",   "mixed_4_3",
                                       "skew_1_3",    "square_sum"};

void theorem_suite(Checker& c) {
  int well = 0, not_well = 0;
  for (const auto& name : kCorpus) {
    auto s = corpus(name);
    auto rep = analyze(s);
    const Ring& ring = s.ring();
    // P2
    c.expect(rep.jacobian == canonical_associate(product_of_powers(rep, ring, -1)), name + ": P2");
    // P3
    int expected = 0;
    for (int a : s.gen_weights()) expected += a;
    for (int b : ring->weights()) expected -= b;
    auto w = weighted_degree(rep.jacobian);
    c.expect(w.homogeneous && w.degree == expected, name + ": P3");
    // P4
    std::vector<Poly> ramified_in_pullbacks, jac_factors;
    for (const auto& pb : rep.pullbacks) {
      Factorization f = factor(s.pullback(pb.contraction));
      for (const auto& [q, m] : f.factors)
        if (m >= 2 &&
            std::none_of(ramified_in_pullbacks.begin(), ramified_in_pullbacks.end(), [&](const Poly& x) { return x == q; }))
          ramified_in_pullbacks.push_back(q);
    }
    if (total_degree(rep.jacobian) > 0)
      for (const auto& [q, m] : factor(rep.jacobian).factors) jac_factors.push_back(q);
    std::sort(ramified_in_pullbacks.begin(), ramified_in_pullbacks.end(), poly_less);
    std::sort(jac_factors.begin(), jac_factors.end(), poly_less);
    c.expect(ramified_in_pullbacks == jac_factors, name + ": P4");
    // P5
    Poly st = s.pullback(rep.S_tilde);
    c.expect(divide_if_exact(st, rep.jacobian).has_value(), name + ": P5 J | S_tilde(f)");
    c.expect(divide_if_exact(st, rep.S).has_value(), name + ": P5 S | S_tilde(f)");
    auto back = subalgebra_membership(st, s);
    c.expect(back && associated(*back, rep.S_tilde), name + ": P5 membership");
    // P6
    c.expect(rep.by_membership == rep.by_factor_pattern, name + ": P6 agreement");
    if (rep.well_ramified) c.expect(associated(st, rep.R), name + ": P6 S_tilde = R");
    (rep.well_ramified ? well : not_well)++;
    auto failed = verify_report(rep, s);
    for (const auto& f : failed) c.expect(false, name + ": verify " + f);
  }
  c.expect(well >= 2 && not_well >= 2, "corpus mix");
}

void galois_sanity(Checker& c) {
  for (const char* name : {"symmetric_2", "symmetric_3", "dihedral_3", "dihedral_4", "dihedral_5", "monomial_2_3",
                           "monomial_4_2_3", "cyclic_5"}) {
    auto s = corpus(name);
    auto rep = analyze(s);
    c.expect(rep.well_ramified, std::string(name) + ": well-ramified");
    if (!rep.discriminant) {
      c.expect(rep.ramification.empty(), std::string(name) + ": discriminant");
      continue;
    }
    c.expect(s.pullback(rep.discriminant->D_rep) == rep.R, std::string(name) + ": D_tilde(f) = R");
  }
  auto s2 = corpus("symmetric_2");
  auto rep = analyze(s2);
  c.expect(rep.discriminant && associated(rep.discriminant->D_rep, parse("y1^2 - 4*y2", s2.tag_ring())),
           "symmetric_2: classical discriminant");
}

std::string fiber_audits(Checker& c) {
  std::ostringstream detail;
  const std::vector<std::pair<std::string, int>> specs{{"reference_1", 12}, {"reference_2", 4}, {"symmetric_2", 2}};
  for (const auto& [name, r] : specs) {
    auto s = corpus(name);
    auto rep = analyze(s);
    auto audit = branch_audit(s, rep, 20, 20240611, FiberOptions{1e-8, 1e-6});
    c.expect(audit.degree == r, name + ": r");
    c.expect(audit.max_count <= r, name + ": a sample exceeds r");
    c.expect(audit.generic_equal_r == audit.generic_sampled - audit.generic_indeterminate, name + ": generic = r");
    for (const auto& l : audit.loci)
      c.expect(l.below_r == l.sampled - l.indeterminate, name + ": locus " + to_string(l.contraction));
    for (const auto& v : audit.violations) c.expect(false, name + ": " + v);
    detail << name << " " << audit.generic_equal_r << "/" << audit.generic_sampled << "; ";
  }
  return detail.str();
}

std::vector<Poly> irreducible_pool(const Ring& ring) {
  Json doc = Json::parse(read_file(std::string(VRG_ORACLE_DIR) + "/irreducibles.json"));
  std::vector<Poly> out;
  for (const auto& t : doc) {
    std::string s = t.get<std::string>();
    for (std::size_t pos = 0; (pos = s.find("**", pos)) != std::string::npos;) s.replace(pos, 2, "^");
    out.push_back(canonical_associate(parse(s, ring)));
  }
  return out;
}

void fuzzing(Checker& c) {
  Rng rng(20240611);
  auto R3 = make_ring({"X", "Y", "Z"}, {1, 1, 1});
  auto pool = irreducible_pool(R3);
  auto pick = [&]() -> const Poly& { return pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)]; };
  auto by_poly = [](const auto& a, const auto& b) { return poly_less(a.first, b.first); };
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::pair<Poly, int>> want;
    Poly p(R3, testing::small_rat(rng));
    int k = uniform(rng, 1, 3);
    for (int j = 0; j < k; ++j) {
      const Poly& q = pick();
      int m = uniform(rng, 1, 2);
      auto it = std::find_if(want.begin(), want.end(), [&](const auto& w) { return w.first == q; });
      if (it == want.end())
        want.emplace_back(q, m);
      else
        it->second += m;
      p *= pow(q, m);
    }
    Factorization f = factor(p);
    auto got = f.factors;
    std::sort(got.begin(), got.end(), by_poly);
    std::sort(want.begin(), want.end(), by_poly);
    if (!(f.expand(R3) == p) || got != want) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " of 1000 products");

  bad = 0;
  const std::vector<std::string> names{"reference_1", "reference_2", "symmetric_2", "symmetric_3", "dihedral_3",
                                       "mixed_5_2"};
  for (int i = 0; i < 500; ++i) {
    auto s = corpus(names[i % names.size()]);
    Poly g = testing::random_poly(rng, s.tag_ring(), 3, 2);
    Poly p = s.pullback(g);
    auto rep = subalgebra_membership(p, s);
    if (!rep || !(s.pullback(*rep) == p)) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " of 500 membership hits");

  bad = 0;
  for (int i = 0; i < 500; ++i) {
    const Poly& Q = pick();
    Poly a = testing::random_poly(rng, R3, 3, 2) * pow(Q, uniform(rng, 0, 2));
    Poly b = testing::random_poly(rng, R3, 3, 2) * pow(Q, uniform(rng, 0, 2));
    if (valuation(Q, a * b) != valuation(Q, a) + valuation(Q, b)) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " of 500 valuation pairs");
}

std::string mutations(Checker& c) {
  auto s = corpus("reference_1");
  Json stored = report_to_json(analyze(s), s, nullptr);
  c.expect(verify_report(report_from_json(stored, s), s).empty(), "untouched report verifies");
  using Tamper = std::function<void(Json&)>;
  const std::vector<std::pair<std::string, Tamper>> modes{
      {"e_Q of X", [](Json& d) { d["ramification"][0]["e"] = 3; }},
      {"e_Q of Y", [](Json& d) { d["ramification"][1]["e"] = 2; }},
      {"e_Q of X^2 - Y^3", [](Json& d) { d["ramification"][2]["e"] = 1; }},
      {"D_tilde", [](Json& d) { d["discriminant"]["D_rep"] = "y2*(y1^2 - 3*y2)"; }},
      {"D", [](Json& d) { d["discriminant"]["D"] = "X^2*Y^3*(X^2 - Y^3)"; }},
      {"contraction", [](Json& d) { d["ramification"][0]["contraction"] = "y1"; }},
      {"well_ramified flag", [](Json& d) { d["well_ramified"] = false; }},
      {"S", [](Json& d) { d["S"] = "X*Y"; }},
      {"R", [](Json& d) { d["R"] = "X^2*Y^3"; }},
      {"discarded unit", [](Json& d) { d["discarded_unit"] = "3"; }},
      {"quotient", [](Json& d) { d["quotient_DJ"] = "X*Y"; }},
      {"S_tilde", [](Json& d) { d["S_tilde"] = "y2"; }},
      {"degree", [](Json& d) { d["degree"] = 6; }},
      {"dropped prime", [](Json& d) { d["ramification"].erase(1); }},
  };
  int caught = 0;
  for (const auto& [label, tamper] : modes) {
    Json d = stored;
    tamper(d);
    bool detected = !verify_report(report_from_json(d, s), s).empty();
    c.expect(detected, "tampering not detected: " + label);
    caught += detected;
  }
  c.expect(modes.size() >= 5, "mode count");
  return std::to_string(caught) + "/" + std::to_string(modes.size()) + " modes detected";
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<std::string(Checker&)> run;
  };
  auto plain = [](void (*f)(Checker&)) {
    return [f](Checker& c) {
      f(c);
      return std::string();
    };
  };
  const std::vector<Criterion> criteria{
      {1, "first reference example", 5, plain(reference_one)},
      {2, "second reference example", 5, plain(reference_two)},
      {3, "jacobian theorem suite over the corpus", 120, plain(theorem_suite)},
      {4, "invariant rings are well-ramified", 0, plain(galois_sanity)},
      {5, "fiber audit", 30, fiber_audits},
      {6, "property fuzzing", 0, plain(fuzzing)},
      {7, "report mutation check", 0, mutations},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checker c;
    std::string detail;
    auto start = Clock::now();
    try {
      detail = cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (cr.limit_s > 0 && secs > cr.limit_s) c.expect(false, "time limit exceeded");
    bool ok = c.failures.empty();
    failed += !ok;
    std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", cr.id, ok ? "PASS" : "FAIL", cr.title, secs,
                detail.empty() ? "" : "  ", detail.c_str());
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
  }
  return failed == 0 ? 0 : 1;
}
